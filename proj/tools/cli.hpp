#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "pcnlab/bounds/conditions.hpp"
#include "pcnlab/bounds/pipelines.hpp"

namespace pcnlab::cli {

enum class Format { kText, kJson, kCsv };

struct RunConfig {
  unsigned precision_bits = 64;
  std::uint64_t enumeration_cap = std::uint64_t{1} << 22;
  arith::FactorBudget factoring_budget{};
  std::uint64_t random_seed = 1;
  std::uint64_t max_trials = 1000000;
  Format output_format = Format::kText;
  unsigned threads = 0;  // 0: hardware parallelism
  bool explain = false;
  bounds::Theorem1Options thm1{};
  bounds::Theorem0Options thm0{};
};

/// Exit status: 0 success, 1 a condition or check fails, 2 usage, parse or resource error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::string emit(const bounds::PipelineResult& r, Format f);
std::string emit(const bounds::BoundReport& r, Format f);
bounds::PipelineResult pipeline_from_json(const std::string& text);

}  // namespace pcnlab::cli
