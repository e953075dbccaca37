#pragma once

#include <functional>
#include <vector>

#include "pcnlab/arith/bigint.hpp"
#include "pcnlab/arith/enclosure.hpp"

namespace pcnlab::bounds {

enum class Verdict { kHolds, kFails, kUndecided };

const char* to_string(Verdict v);

/// base^exponent with a positive rational base and rational exponent.
struct PowTerm {
  Rational base;
  Rational exponent;
};

/// coeff * prod base_i^exponent_i * exp(log_extra), where log_extra is an
/// optional enclosure-valued term with no exact form (used for Robin bounds).
struct Side {
  Rational coeff = 1;
  std::vector<PowTerm> powers;
  std::function<arith::RealEnclosure(mpfr_prec_t)> log_extra;

  Side& times(const Rational& c) {
    coeff *= c;
    return *this;
  }
  Side& times_pow(const Rational& base, const Rational& exponent) {
    powers.push_back({base, exponent});
    return *this;
  }
  bool exact() const { return !log_extra; }
  arith::RealEnclosure eval(mpfr_prec_t precision) const;
};

enum class Relation { kGreaterEqual, kGreater };

struct Comparison {
  Verdict verdict = Verdict::kUndecided;
  arith::RealEnclosure lhs, rhs;
  mpfr_prec_t precision = 0;
  bool exact_fallback = false;
};

/// Process-wide starting precision for compare(), 64 bits by default.
void set_initial_precision(mpfr_prec_t bits);
mpfr_prec_t initial_precision();

/// Decide lhs REL rhs. Enclosures are tried at 1x, 2x and 4x the starting precision; a verdict
/// is emitted once they are disjoint. If they still overlap and both sides are
/// exact, both sides are raised to a common integer power and compared as
/// rationals (bounded in size); otherwise the result is kUndecided.
Comparison compare(const Side& lhs, Relation rel, const Side& rhs);

}  // namespace pcnlab::bounds
