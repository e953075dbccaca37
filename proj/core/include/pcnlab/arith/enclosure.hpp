#pragma once

#include <cstdint>
#include <span>
#include <string>

#include <mpfr.h>

#include "pcnlab/arith/bigint.hpp"

namespace pcnlab::arith {

/// Closed interval [lower, upper] of reals held at a fixed MPFR precision.
/// Every operation rounds the lower end down and the upper end up, so the
/// true value of an expression evaluated on enclosures stays inside.
class RealEnclosure {
 public:
  explicit RealEnclosure(mpfr_prec_t precision_bits = 64);
  RealEnclosure(const RealEnclosure& other);
  RealEnclosure(RealEnclosure&& other) noexcept;
  RealEnclosure& operator=(const RealEnclosure& other);
  RealEnclosure& operator=(RealEnclosure&& other) noexcept;
  ~RealEnclosure();

  static RealEnclosure exact(const BigInt& v, mpfr_prec_t precision_bits);
  static RealEnclosure exact(const Rational& v, mpfr_prec_t precision_bits);
  static RealEnclosure exact(long v, mpfr_prec_t precision_bits);
  static RealEnclosure euler_gamma(mpfr_prec_t precision_bits);
  static RealEnclosure ln2(mpfr_prec_t precision_bits);

  mpfr_prec_t precision() const { return prec_; }
  const mpfr_t& lower() const { return lo_; }
  const mpfr_t& upper() const { return hi_; }
  double lower_double() const;
  double upper_double() const;
  double midpoint_double() const;

  bool contains(double v) const;
  bool is_positive() const;  // lower > 0
  bool is_negative() const;  // upper < 0
  bool contains_zero() const { return !is_positive() && !is_negative(); }

  /// Strictly below / above with disjoint enclosures.
  bool certainly_less(const RealEnclosure& rhs) const;
  bool certainly_greater(const RealEnclosure& rhs) const { return rhs.certainly_less(*this); }

  RealEnclosure operator+(const RealEnclosure& rhs) const;
  RealEnclosure operator-(const RealEnclosure& rhs) const;
  RealEnclosure operator*(const RealEnclosure& rhs) const;
  RealEnclosure operator/(const RealEnclosure& rhs) const;
  RealEnclosure operator-() const;

  RealEnclosure exp() const;
  RealEnclosure log() const;  // requires a positive enclosure
  /// this^exponent for a positive enclosure, as exp(exponent * log(this)).
  RealEnclosure pow(const RealEnclosure& exponent) const;
  RealEnclosure pow(const Rational& exponent) const;

  /// "[lo, hi]" with 17 significant digits each.
  std::string to_string() const;

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

enum class RobinConstant {
  kEulerGamma,  // e^gamma
  kRounded0578  // e^0.578, the rounded constant in the displayed crossover inequality
};

/// Enclosure of e^gamma n log log n + 0.6483 n / log log n. Throws for n < 3.
RealEnclosure robin_upper(std::uint64_t n, mpfr_prec_t precision_bits = 128,
                          RobinConstant constant = RobinConstant::kEulerGamma);

/// Enclosure of 2^s / (p_1 ... p_s)^(1/a) for the listed distinct primes,
/// each of which must be <= 2^a.
RealEnclosure c_constant(std::span<const std::uint64_t> primes_leq_2a, unsigned a,
                         mpfr_prec_t precision_bits = 128);

/// Exact maximization of c_{r,a} over all r: every prime p <= 2^a contributes
/// the factor 2 / p^(1/a) >= 1, so the supremum takes all of them (or all odd
/// ones when only odd r are admitted).
struct CConstantSupremum {
  std::vector<std::uint64_t> primes;
  RealEnclosure value;
};
CConstantSupremum c_constant_supremum(unsigned a, bool odd_only, mpfr_prec_t precision_bits = 128);

/// Exact test of c_{r,a} < bound for the prime set of the supremum:
/// 2^(s a) < bound^a * prod p, evaluated in integers.
bool c_constant_below(std::span<const std::uint64_t> primes, unsigned a, const Rational& bound);

}  // namespace pcnlab::arith
