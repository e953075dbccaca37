#include "pcnlab/bounds/compare.hpp"

#include <atomic>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace pcnlab::bounds {

using arith::RealEnclosure;

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds: return "holds";
    case Verdict::kFails: return "fails";
    case Verdict::kUndecided: return "undecided";
  }
  return "?";
}

namespace {
std::atomic<mpfr_prec_t> g_initial_precision{64};
}

void set_initial_precision(mpfr_prec_t bits) {
  if (bits < MPFR_PREC_MIN || bits > 1 << 20) throw std::invalid_argument("precision out of range");
  g_initial_precision = bits;
}

mpfr_prec_t initial_precision() { return g_initial_precision; }

RealEnclosure Side::eval(mpfr_prec_t precision) const {
  RealEnclosure acc = RealEnclosure::exact(coeff, precision);
  for (const auto& t : powers) {
    if (sgn(t.base) <= 0) throw std::domain_error("Side: power with non-positive base");
    if (t.exponent == 0) continue;
    if (t.exponent == 1) {
      acc = acc * RealEnclosure::exact(t.base, precision);
      continue;
    }
    acc = acc * RealEnclosure::exact(t.base, precision).pow(t.exponent);
  }
  if (log_extra) acc = acc * log_extra(precision).exp();
  return acc;
}

namespace {

constexpr std::size_t kMaxExactBits = std::size_t{1} << 26;

BigInt lcm_denominators(const Side& s, BigInt acc) {
  for (const auto& t : s.powers) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), t.exponent.get_den_mpz_t());
  return acc;
}

// |value|^D as an exact rational, or nullopt when the result would be too large.
std::optional<Rational> raise(const Side& s, const BigInt& D) {
  if (!D.fits_ulong_p()) return std::nullopt;
  const unsigned long d = D.get_ui();
  double bits = 0;
  auto size_bits = [](const Rational& r) {
    return static_cast<double>(mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2));
  };
  bits += size_bits(s.coeff) * static_cast<double>(d);
  for (const auto& t : s.powers) bits += size_bits(t.base) * std::abs(Rational(t.exponent * D).get_d());
  if (bits > static_cast<double>(kMaxExactBits)) return std::nullopt;

  auto pow_q = [](const Rational& b, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), e);
    r.canonicalize();
    return r;
  };
  Rational out = pow_q(abs(s.coeff), d);
  for (const auto& t : s.powers) {
    const Rational e = t.exponent * D;
    if (e.get_den() != 1) throw std::logic_error("raise: exponent not integral after scaling");
    const BigInt k = e.get_num();
    const BigInt ak = abs(k);
    if (!ak.fits_ulong_p()) return std::nullopt;
    const Rational f = pow_q(t.base, ak.get_ui());
    out *= (k >= 0) ? f : Rational(1) / f;
  }
  return out;
}

}  // namespace

Comparison compare(const Side& lhs, Relation rel, const Side& rhs) {
  Comparison c;
  const mpfr_prec_t start = initial_precision();
  for (mpfr_prec_t prec : {start, 2 * start, 4 * start}) {
    c.lhs = lhs.eval(prec);
    c.rhs = rhs.eval(prec);
    c.precision = prec;
    if (c.lhs.certainly_greater(c.rhs)) {
      c.verdict = Verdict::kHolds;
      return c;
    }
    if (c.lhs.certainly_less(c.rhs)) {
      c.verdict = Verdict::kFails;
      return c;
    }
  }
  if (!lhs.exact() || !rhs.exact()) return c;

  // Exact comparison. Both products of positive powers are positive; signs
  // come from the coefficients.
  const int sl = sgn(lhs.coeff), sr = sgn(rhs.coeff);
  int cmp;
  if (sl != sr || sl == 0) {
    cmp = sl < sr ? -1 : (sl > sr ? 1 : 0);
  } else {
    const BigInt D = lcm_denominators(rhs, lcm_denominators(lhs, BigInt(1)));
    auto L = raise(lhs, D);
    auto R = raise(rhs, D);
    if (!L || !R) return c;
    cmp = ::cmp(*L, *R);  // |lhs|^D vs |rhs|^D
    if (sl < 0) cmp = -cmp;
  }
  c.exact_fallback = true;
  const bool holds = rel == Relation::kGreaterEqual ? cmp >= 0 : cmp > 0;
  c.verdict = holds ? Verdict::kHolds : Verdict::kFails;
  return c;
}

}  // namespace pcnlab::bounds
