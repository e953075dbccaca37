#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pcnlab/arith/enclosure.hpp"
#include "pcnlab/arith/factor.hpp"
#include "pcnlab/bounds/compare.hpp"

namespace pcnlab::bounds {

enum class ConditionId {
  kIpPcn1,       // CN > q^(n/2) W(q') prod W_l theta_l
  kCond1,        // q^(n/2) (1 - n(q+1)/q^2) >= W(q') 2^(t(n)-1)
  kCond2,        // q^(3n/8) (1 - n(q+1)/q^2) >= 4514.7 * 2^(t(n)-1)
  kCond2Robin,   // same with t(n) replaced by the Robin bound
  kCond3ExactW,  // q^(n/2) A > W(q') prod W_l theta_l
  kCond3C16,     // same with W(q') <= c_{q',16} q^(n/16)
  kIpPcn2,       // the main inequality at n = p^l m
  kCondL1,       // CN >= q^(n/2) W(q') 2^((l+1)t(m)-1)
  kCond2POdd,
  kCond3P2,
  kCondA12,
};

std::string to_string(ConditionId id);
std::optional<ConditionId> condition_from_string(const std::string& name);
/// The inequality behind a condition, in plain notation.
std::string formula(ConditionId id, bool robin_variant = false);

struct BoundReport {
  ConditionId id = ConditionId::kIpPcn1;
  bool robin_variant = false;
  // (q, n) conditions fill q and n; the (l, m, q) family also fills l and m.
  std::uint64_t q = 0, n = 0, l = 0, m = 0;
  bool triple = false;
  Comparison cmp;
  std::optional<Rational> lhs_exact, rhs_exact;  // when a side is rational

  Verdict verdict() const { return cmp.verdict; }
  bool holds() const { return cmp.verdict == Verdict::kHolds; }
};

/// Sum of the divisors of n.
BigInt t_of(std::uint64_t n);

enum class CnVariant { kGeneral, kIp1, kIp2, kIp3 };
std::string to_string(CnVariant v);

/// q^n times the bracketed lower-bound expression for CN_q(n). May be <= 0.
/// kIp2 needs p > 2 and p | n; kIp3 needs p = 2 and 2 | n.
Rational cn_lower(std::uint64_t q, std::uint64_t n, CnVariant variant);

/// prod over proper divisors l of n of W_l(F_l') theta_l(F_l').
Rational divisor_product(std::uint64_t q, std::uint64_t n);

enum class WMode { kExact, kLemmaA, kCAExact };
std::string to_string(WMode m);

/// Published upper bound on c_{r,a} over all r (or odd r).
Rational lemma_constant(unsigned a, bool odd_only);

/// CN lower bound > q^(n/2) W(q') prod W_l theta_l, W(q') per mode.
/// kLemmaA and kCAExact use the exponent `a`.
BoundReport main_inequality(std::uint64_t q, std::uint64_t n, WMode mode, unsigned a = 8,
                            const arith::FactorBudget& budget = {});
/// Same inequality at n = p^l m, reported as IP_PCN2 with (l, m, q).
BoundReport main_inequality_lmq(std::uint64_t l, std::uint64_t m, std::uint64_t q,
                                const arith::FactorBudget& budget = {});

BoundReport cond1(std::uint64_t q, std::uint64_t n, const arith::FactorBudget& budget = {});

/// q need only be an integer >= 2 here; the Robin variant needs n >= 3.
BoundReport cond2(std::uint64_t n, std::uint64_t q, bool use_robin,
                  arith::RobinConstant constant = arith::RobinConstant::kRounded0578);

enum class W3Mode { kC16, kExact };
BoundReport cond3(std::uint64_t q, std::uint64_t n, W3Mode mode, const arith::FactorBudget& budget = {});

enum class Family { kCond2POdd, kCond3P2, kA12 };
std::string to_string(Family f);

/// Exact-t(m) condition at the prime power q, n = p^l m.
BoundReport cond_p_family(std::uint64_t l, std::uint64_t m, std::uint64_t q, Family which);

/// Lower bound of the kCond2POdd left side valid for every odd characteristic:
/// q^(3*3^l m/8) (1 - m(1/q + 1/q^2 + 1/q^3 + 4/q^6)) >= 2257.35 * 2^((l+1)t(m)).
/// Increasing in q once the bracket is positive.
BoundReport cond_p_odd_floor(std::uint64_t l, std::uint64_t m, std::uint64_t q);

/// The q-free reductions with t(m) replaced by the Robin bound (constant
/// e^gamma), evaluated at the smallest admissible q (m+2, or 8 for m <= 5
/// in characteristic 2). l is ignored for kA12. Needs m >= 3.
BoundReport robin_reduction(Family which, std::uint64_t l, std::uint64_t m);

BoundReport cond_l1(std::uint64_t l, std::uint64_t m, std::uint64_t q, const arith::FactorBudget& budget = {});

}  // namespace pcnlab::bounds
