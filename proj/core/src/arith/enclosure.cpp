#include "pcnlab/arith/enclosure.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "pcnlab/arith/primality.hpp"

namespace pcnlab::arith {

RealEnclosure::RealEnclosure(mpfr_prec_t precision_bits) : prec_(precision_bits) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

RealEnclosure::RealEnclosure(const RealEnclosure& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

RealEnclosure::RealEnclosure(RealEnclosure&& other) noexcept : RealEnclosure(other.prec_) {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

RealEnclosure& RealEnclosure::operator=(const RealEnclosure& other) {
  if (this == &other) return *this;
  prec_ = other.prec_;
  mpfr_set_prec(lo_, prec_);
  mpfr_set_prec(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
  return *this;
}

RealEnclosure& RealEnclosure::operator=(RealEnclosure&& other) noexcept {
  std::swap(prec_, other.prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

RealEnclosure::~RealEnclosure() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

RealEnclosure RealEnclosure::exact(const BigInt& v, mpfr_prec_t precision_bits) {
  RealEnclosure r(precision_bits);
  mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
  return r;
}

RealEnclosure RealEnclosure::exact(const Rational& v, mpfr_prec_t precision_bits) {
  RealEnclosure r(precision_bits);
  mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
  return r;
}

RealEnclosure RealEnclosure::exact(long v, mpfr_prec_t precision_bits) {
  RealEnclosure r(precision_bits);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

RealEnclosure RealEnclosure::euler_gamma(mpfr_prec_t precision_bits) {
  RealEnclosure r(precision_bits);
  mpfr_const_euler(r.lo_, MPFR_RNDD);
  mpfr_const_euler(r.hi_, MPFR_RNDU);
  return r;
}

RealEnclosure RealEnclosure::ln2(mpfr_prec_t precision_bits) {
  RealEnclosure r(precision_bits);
  mpfr_const_log2(r.lo_, MPFR_RNDD);
  mpfr_const_log2(r.hi_, MPFR_RNDU);
  return r;
}

double RealEnclosure::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double RealEnclosure::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
double RealEnclosure::midpoint_double() const { return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)); }

bool RealEnclosure::contains(double v) const {
  return mpfr_cmp_d(lo_, v) <= 0 && mpfr_cmp_d(hi_, v) >= 0;
}

bool RealEnclosure::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool RealEnclosure::is_negative() const { return mpfr_sgn(hi_) < 0; }

bool RealEnclosure::certainly_less(const RealEnclosure& rhs) const { return mpfr_less_p(hi_, rhs.lo_) != 0; }

RealEnclosure RealEnclosure::operator+(const RealEnclosure& rhs) const {
  RealEnclosure r(std::max(prec_, rhs.prec_));
  mpfr_add(r.lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, rhs.hi_, MPFR_RNDU);
  return r;
}

RealEnclosure RealEnclosure::operator-(const RealEnclosure& rhs) const {
  RealEnclosure r(std::max(prec_, rhs.prec_));
  mpfr_sub(r.lo_, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, rhs.lo_, MPFR_RNDU);
  return r;
}

RealEnclosure RealEnclosure::operator-() const {
  RealEnclosure r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

RealEnclosure RealEnclosure::operator*(const RealEnclosure& rhs) const {
  const mpfr_prec_t p = std::max(prec_, rhs.prec_);
  RealEnclosure r(p);
  mpfr_t t;
  mpfr_init2(t, p);
  const mpfr_t* a[2] = {&lo_, &hi_};
  const mpfr_t* b[2] = {&rhs.lo_, &rhs.hi_};
  bool first = true;
  for (auto* x : a) {
    for (auto* y : b) {
      mpfr_mul(t, *x, *y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, *x, *y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

RealEnclosure RealEnclosure::operator/(const RealEnclosure& rhs) const {
  if (rhs.contains_zero()) throw std::domain_error("RealEnclosure: division by an enclosure containing 0");
  const mpfr_prec_t p = std::max(prec_, rhs.prec_);
  RealEnclosure inv(p);
  mpfr_ui_div(inv.lo_, 1, rhs.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, rhs.lo_, MPFR_RNDU);
  return *this * inv;
}

RealEnclosure RealEnclosure::exp() const {
  RealEnclosure r(prec_);
  mpfr_exp(r.lo_, lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, hi_, MPFR_RNDU);
  return r;
}

RealEnclosure RealEnclosure::log() const {
  if (!is_positive()) throw std::domain_error("RealEnclosure: log of a non-positive enclosure");
  RealEnclosure r(prec_);
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

RealEnclosure RealEnclosure::pow(const RealEnclosure& exponent) const { return (exponent * log()).exp(); }

RealEnclosure RealEnclosure::pow(const Rational& exponent) const {
  return pow(RealEnclosure::exact(exponent, prec_));
}

std::string RealEnclosure::to_string() const {
  char buf[128];
  mpfr_snprintf(buf, sizeof buf, "[%.17RDg, %.17RUg]", lo_, hi_);
  return buf;
}

RealEnclosure robin_upper(std::uint64_t n, mpfr_prec_t precision_bits, RobinConstant constant) {
  if (n < 3) throw std::invalid_argument("robin_upper: n must be >= 3");
  const auto nn = RealEnclosure::exact(static_cast<long>(n), precision_bits);
  const auto loglog = nn.log().log();
  const RealEnclosure eg = constant == RobinConstant::kEulerGamma
                               ? RealEnclosure::euler_gamma(precision_bits).exp()
                               : RealEnclosure::exact(Rational(578, 1000), precision_bits).exp();
  const auto c = RealEnclosure::exact(Rational(6483, 10000), precision_bits);
  return eg * nn * loglog + c * nn / loglog;
}

namespace {

void check_c_primes(std::span<const std::uint64_t> primes, unsigned a) {
  if (a == 0 || a > 62) throw std::invalid_argument("c_constant: a out of range");
  const std::uint64_t limit = std::uint64_t{1} << a;
  std::set<std::uint64_t> seen;
  for (std::uint64_t p : primes) {
    if (p > limit) throw std::invalid_argument("c_constant: prime " + std::to_string(p) + " exceeds 2^a");
    if (!is_prime_u64(p)) throw std::invalid_argument("c_constant: " + std::to_string(p) + " is not prime");
    if (!seen.insert(p).second) throw std::invalid_argument("c_constant: primes must be distinct");
  }
}

}  // namespace

RealEnclosure c_constant(std::span<const std::uint64_t> primes_leq_2a, unsigned a, mpfr_prec_t precision_bits) {
  check_c_primes(primes_leq_2a, a);
  if (primes_leq_2a.empty()) return RealEnclosure::exact(1L, precision_bits);
  BigInt prod = 1;
  for (std::uint64_t p : primes_leq_2a) prod *= big_from_u64(p);
  BigInt two_s;
  mpz_ui_pow_ui(two_s.get_mpz_t(), 2, primes_leq_2a.size());
  const auto root = RealEnclosure::exact(prod, precision_bits).pow(Rational(1, a));
  return RealEnclosure::exact(two_s, precision_bits) / root;
}

CConstantSupremum c_constant_supremum(unsigned a, bool odd_only, mpfr_prec_t precision_bits) {
  std::vector<std::uint64_t> primes;
  for (std::uint32_t p : primes_up_to(std::uint64_t{1} << a)) {
    if (odd_only && p == 2) continue;
    primes.push_back(p);
  }
  auto value = c_constant(primes, a, precision_bits);
  return {std::move(primes), std::move(value)};
}

bool c_constant_below(std::span<const std::uint64_t> primes, unsigned a, const Rational& bound) {
  check_c_primes(primes, a);
  // 2^s / P^(1/a) < B  <=>  2^(s a) < B^a P  (all positive)
  BigInt lhs;
  mpz_ui_pow_ui(lhs.get_mpz_t(), 2, primes.size() * a);
  Rational rhs = 1;
  for (unsigned i = 0; i < a; ++i) rhs *= bound;
  BigInt prod = 1;
  for (std::uint64_t p : primes) prod *= big_from_u64(p);
  rhs *= prod;
  return Rational(lhs) < rhs;
}

}  // namespace pcnlab::arith
