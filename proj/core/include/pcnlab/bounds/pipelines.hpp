#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcnlab/arith/enclosure.hpp"
#include "pcnlab/arith/factor.hpp"

namespace pcnlab::bounds {

/// One stage of a reduction: a labelled table of unsigned integer rows.
struct Stage {
  std::string label;
  std::vector<std::string> columns;  // e.g. {"n", "q"} or {"l", "m", "q"}
  std::vector<std::vector<std::uint64_t>> rows;

  std::size_t count() const { return rows.size(); }
};

struct PipelineResult {
  std::string name;
  std::vector<Stage> stages;
  std::vector<std::pair<std::string, std::string>> notes;  // key/value diagnostics

  const Stage& stage(std::string_view label) const;
  bool has_stage(std::string_view label) const;
};

struct Theorem1Options {
  std::uint64_t n_max = 1212;
  /// q0 = least prime power >= n+2 by default; >= n+1 when set.
  bool q0_from_n_plus_1 = false;
  std::uint64_t robin_scan_max = 5000;
  arith::RobinConstant robin_constant = arith::RobinConstant::kRounded0578;
  arith::FactorBudget budget{};
};

/// Stages: "table1" (n,q0,q1), "region" (n,q), "cond3_c16" (n,q), "cond3_exact" (n,q),
/// "not_completely_basic" (n,q), "robin_violations" (n), "q0_reading_differs" (n),
/// "rows_above_984" (n).
PipelineResult pipeline_theorem1(const Theorem1Options& opt = {});

/// Only the threshold rows (n, q0, q1).
Stage table1(const Theorem1Options& opt = {});

/// Least n0 such that the Robin form of cond2 at q = n+2 holds for all n0 < n <= scan_max,
/// together with every violating n in [3, scan_max].
struct RobinCrossover {
  std::uint64_t last_violation = 0;
  std::vector<std::uint64_t> violations;
};
RobinCrossover robin_crossover(std::uint64_t scan_max = 5000,
                               arith::RobinConstant constant = arith::RobinConstant::kRounded0578);

struct Theorem0Options {
  // box scanned for odd characteristic pairs (l, m)
  std::uint64_t p_odd_l_max = 8, p_odd_m_max = 400;
  // box scanned for characteristic 2, l >= 2, odd m
  std::uint64_t p2_l_max = 10, p2_m_max = 400;
  // odd m range for the l = 1 case in characteristic 2
  std::uint64_t a12_m_max = 873;
  std::uint64_t a12_robin_scan_max = 5000;
  arith::FactorBudget budget{};
};

/// Stages:
///  "p_odd.robin_pairs" (l,m), "p_odd.triples" (l,m,q), "p_odd.not_completely_basic" (l,m,q),
///  "p2.robin_pairs" (l,m), "p2.triples", "p2.not_completely_basic",
///  "a12.robin_failures" (m), "a12.exceptions" (l,m,q), "a12.m_not_dividing_q_minus_1",
///  "a12.main_inequality_fails".
PipelineResult pipeline_theorem0(const Theorem0Options& opt = {});

/// Pairs (n, q) left to examples: the remainder of the main scan followed by the
/// (p^l m, q) of every prime-power-part remainder, duplicates removed in order.
/// Notes report the raw count and each removed duplicate.
PipelineResult table2(const PipelineResult& thm1, const PipelineResult& thm0);

}  // namespace pcnlab::bounds
