#include "pcnlab/bounds/conditions.hpp"

#include <array>
#include <stdexcept>
#include <utility>

#include "pcnlab/arith/numtheory.hpp"
#include "pcnlab/fqxpoly/cosets.hpp"

namespace pcnlab::bounds {

using arith::RealEnclosure;

namespace {

constexpr std::array<std::pair<ConditionId, const char*>, 11> kNames{{
    {ConditionId::kIpPcn1, "IP_PCN1"},
    {ConditionId::kCond1, "COND1"},
    {ConditionId::kCond2, "COND2"},
    {ConditionId::kCond2Robin, "COND2_ROBIN"},
    {ConditionId::kCond3ExactW, "COND3_EXACT_W"},
    {ConditionId::kCond3C16, "COND3_C16"},
    {ConditionId::kIpPcn2, "IP_PCN2"},
    {ConditionId::kCondL1, "COND_1"},
    {ConditionId::kCond2POdd, "COND_2_P_ODD"},
    {ConditionId::kCond3P2, "COND_3_P2"},
    {ConditionId::kCondA12, "COND_A12"},
}};

Rational dec(const char* s) { return rational_from_decimal(s); }

Rational rq(std::uint64_t v) { return Rational(big_from_u64(v)); }

Rational inv_pow(std::uint64_t q, std::uint64_t k) { return Rational(1) / Rational(big_pow(q, k)); }

std::uint64_t characteristic(std::uint64_t q) {
  auto f = arith::prime_power_form(q);
  if (!f) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  return f->p;
}

// n = p^l m with p not dividing m.
std::pair<std::uint64_t, std::uint64_t> split_p(std::uint64_t n, std::uint64_t p) {
  std::uint64_t l = 0;
  while (n % p == 0) {
    n /= p;
    ++l;
  }
  return {l, n};
}

std::uint64_t pow_u64(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) {
    if (r > UINT64_MAX / b) throw std::overflow_error("pow_u64 overflow");
    r *= b;
  }
  return r;
}

std::optional<Rational> exact_value(const Side& s) {
  if (!s.exact()) return std::nullopt;
  Rational v = s.coeff;
  for (const auto& t : s.powers) {
    if (t.exponent.get_den() != 1 || !t.exponent.get_num().fits_slong_p()) return std::nullopt;
    const long e = t.exponent.get_num().get_si();
    if (e < 0 || e > 1 << 20) return std::nullopt;
    Rational p;
    mpz_pow_ui(p.get_num_mpz_t(), t.base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(p.get_den_mpz_t(), t.base.get_den_mpz_t(), static_cast<unsigned long>(e));
    p.canonicalize();
    v *= p;
  }
  return v;
}

BoundReport finish(ConditionId id, const Side& lhs, Relation rel, const Side& rhs) {
  BoundReport r;
  r.id = id;
  r.cmp = compare(lhs, rel, rhs);
  r.lhs_exact = exact_value(lhs);
  r.rhs_exact = exact_value(rhs);
  return r;
}

BigInt exact_w(std::uint64_t q, std::uint64_t n, const arith::FactorBudget& budget) {
  auto f = arith::factor_qn_minus_1(q, n, budget);
  if (!f.complete) {
    throw std::runtime_error("factorization of q^n - 1 incomplete for (q, n) = (" + std::to_string(q) + ", " +
                             std::to_string(n) + "), cofactor " + f.cofactor.get_str());
  }
  return arith::radical_info(f).num_divisors;
}

// 1 - n(q+1)/q^2
Rational ip1_bracket(std::uint64_t q, std::uint64_t n) {
  Rational b = 1 - rq(n) * rq(q + 1) / Rational(big_pow(q, 2));
  b.canonicalize();
  return b;
}

Rational ip2_bracket(std::uint64_t q, std::uint64_t p, std::uint64_t m) {
  Rational s = inv_pow(q, 1) + inv_pow(q, 2) + inv_pow(q, p) + 4 * inv_pow(q, 2 * p);
  Rational b = 1 - rq(m) * s;
  b.canonicalize();
  return b;
}

Rational ip3_bracket(std::uint64_t q, std::uint64_t m) {
  Rational s = inv_pow(q, 1) + inv_pow(q, 2) + Rational(2, 3) * inv_pow(q, 3) + 3 * inv_pow(q, 4);
  Rational b = 1 - rq(m) * s;
  b.canonicalize();
  return b;
}

Rational frac(std::uint64_t num, std::uint64_t den) {
  Rational r(big_from_u64(num), big_from_u64(den));
  r.canonicalize();
  return r;
}

Rational fracb(const BigInt& num, std::uint64_t den) {
  Rational r(num, big_from_u64(den));
  r.canonicalize();
  return r;
}

// 2^s (prod p)^(-1/a) for the primes <= 2^a dividing q^n - 1, as factors of a Side.
void append_c_constant(Side& s, std::uint64_t q, std::uint64_t n, unsigned a) {
  const auto primes = arith::small_prime_divisors(q, n, std::uint64_t{1} << a);
  BigInt prod = 1;
  for (auto p : primes) prod *= big_from_u64(p);
  s.times(Rational(big_pow(2, primes.size())));
  if (prod > 1) s.times_pow(Rational(prod), Rational(-1, static_cast<long>(a)));
}

}  // namespace

std::string to_string(ConditionId id) {
  for (auto [k, name] : kNames)
    if (k == id) return name;
  return "?";
}

std::optional<ConditionId> condition_from_string(const std::string& name) {
  for (auto [k, n] : kNames)
    if (name == n) return k;
  return std::nullopt;
}

std::string formula(ConditionId id, bool robin_variant) {
  const std::string R = "R(m) = e^gamma m loglog m + 0.6483 m/loglog m";
  switch (id) {
    case ConditionId::kIpPcn1:
      return "CN_q(n) > q^(n/2) W(q') prod_{l|n, l<n} W_l(F_l') theta_l(F_l'), CN bounded below by "
             "q^n (1 - sum_{d|n} (1 - phi_d(X^(n/d)-1)/q^n))";
    case ConditionId::kCond1: return "q^(n/2) (1 - n(q+1)/q^2) >= W(q') 2^(t(n)-1), t = sum of divisors";
    case ConditionId::kCond2: return "q^(3n/8) (1 - n(q+1)/q^2) >= 4514.7 * 2^(t(n)-1)";
    case ConditionId::kCond2Robin:
      return "q^(3n/8) (1 - n(q+1)/q^2) > 4514.7 * 2^(n (e^0.578 loglog n + 0.6483/loglog n) - 1)";
    case ConditionId::kCond3ExactW:
      return "q^(n/2) (1 - sum_{d|n} (1 - phi_d(X^(n/d)-1)/q^n)) > W(q') prod_{l|n, l<n} W_l theta_l";
    case ConditionId::kCond3C16:
      return "q^(n/2) (1 - sum_{d|n} (1 - phi_d(X^(n/d)-1)/q^n)) > c_{q',16} q^(n/16) prod_{l|n, l<n} W_l theta_l";
    case ConditionId::kIpPcn2: return "main inequality at n = p^l m with exact W(q')";
    case ConditionId::kCondL1: return "CN_q(n) >= q^(n/2) W(q') 2^((l+1)t(m)-1), n = p^l m";
    case ConditionId::kCond2POdd:
      return robin_variant ? "m (m+2)^(3^(l+1) m/8 - 4) >= 2257.35 * 2^((l+1) R(m)), " + R
                           : "q^(3 p^l m/8) (1 - m(1/q + 1/q^2 + 1/q^p + 4/q^(2p))) >= 2257.35 * 2^((l+1)t(m))";
    case ConditionId::kCond3P2:
      return robin_variant ? "m B^(3*2^l m/8 - 3) >= 6 * 2461.62 * 2^((l+1) R(m)), B = 8 (m <= 5) or m+2, " + R
                           : "q^(3*2^l m/8) (1 - m(1/q + 1/q^2 + 2/(3q^3) + 3/q^4)) >= 2461.62 * 2^((l+1)t(m)-1)";
    case ConditionId::kCondA12:
      return robin_variant ? "m B^(5m/6 - 3) >= 12 * 2.81e23 * 4^R(m), B = 8 (m <= 5) or m+2, " + R
                           : "q^(5m/6) (1 - m(1/q + 1/q^2 + 2/(3q^3) + 3/q^4)) >= (5.61e23/2) * 2^(2t(m))";
  }
  return "?";
}

BigInt t_of(std::uint64_t n) { return arith::sigma_t(n); }

std::string to_string(CnVariant v) {
  switch (v) {
    case CnVariant::kGeneral: return "general";
    case CnVariant::kIp1: return "ip1";
    case CnVariant::kIp2: return "ip2";
    case CnVariant::kIp3: return "ip3";
  }
  return "?";
}

std::string to_string(WMode m) {
  switch (m) {
    case WMode::kExact: return "exact";
    case WMode::kLemmaA: return "lemma_a";
    case WMode::kCAExact: return "c_a_exact";
  }
  return "?";
}

std::string to_string(Family f) {
  switch (f) {
    case Family::kCond2POdd: return "cond_2_p_odd";
    case Family::kCond3P2: return "cond_3_p2";
    case Family::kA12: return "a12";
  }
  return "?";
}

Rational cn_lower(std::uint64_t q, std::uint64_t n, CnVariant variant) {
  if (n == 0) throw std::invalid_argument("cn_lower: n must be positive");
  const std::uint64_t p = characteristic(q);
  const Rational qn(big_pow(q, n));
  switch (variant) {
    case CnVariant::kGeneral: {
      BigInt missing = 0;
      for (std::uint64_t d : arith::divisors(n)) missing += big_pow(q, n) - fqxpoly::poly_stats(q, p, n, d).phi;
      return Rational(big_pow(q, n) - missing);
    }
    case CnVariant::kIp1: return qn * ip1_bracket(q, n);
    case CnVariant::kIp2: {
      auto [l, m] = split_p(n, p);
      if (p == 2 || l == 0) throw std::invalid_argument("cn_lower ip2 needs p > 2 and p | n");
      return qn * ip2_bracket(q, p, m);
    }
    case CnVariant::kIp3: {
      auto [l, m] = split_p(n, p);
      if (p != 2 || l == 0) throw std::invalid_argument("cn_lower ip3 needs p = 2 and 2 | n");
      return qn * ip3_bracket(q, m);
    }
  }
  throw std::logic_error("cn_lower: bad variant");
}

Rational divisor_product(std::uint64_t q, std::uint64_t n) {
  const std::uint64_t p = characteristic(q);
  Rational r = 1;
  for (std::uint64_t l : arith::divisors(n)) {
    if (l == n) continue;
    auto s = fqxpoly::poly_stats(q, p, n, l);
    r *= Rational(s.W_sf) * s.theta;
  }
  r.canonicalize();
  return r;
}

Rational lemma_constant(unsigned a, bool odd_only) {
  if (a == 4) return odd_only ? dec("2.9") : dec("4.9");
  if (a == 8) return odd_only ? dec("2461.62") : dec("4514.7");
  if (a == 12 && odd_only) return dec("5.61e23");
  throw std::invalid_argument("no stated constant for a = " + std::to_string(a) + (odd_only ? " (odd)" : ""));
}

BoundReport main_inequality(std::uint64_t q, std::uint64_t n, WMode mode, unsigned a,
                            const arith::FactorBudget& budget) {
  Side lhs, rhs;
  lhs.coeff = cn_lower(q, n, CnVariant::kGeneral);
  rhs.coeff = divisor_product(q, n);
  switch (mode) {
    case WMode::kExact:
      rhs.times(Rational(exact_w(q, n, budget)));
      rhs.times_pow(rq(q), frac(n, 2));
      break;
    case WMode::kLemmaA:
      // q' is odd exactly when q is even
      rhs.times(lemma_constant(a, q % 2 == 0));
      rhs.times_pow(rq(q), frac(n, 2) + frac(n, a));
      break;
    case WMode::kCAExact:
      append_c_constant(rhs, q, n, a);
      rhs.times_pow(rq(q), frac(n, 2) + frac(n, a));
      break;
  }
  auto r = finish(ConditionId::kIpPcn1, lhs, Relation::kGreater, rhs);
  r.q = q;
  r.n = n;
  return r;
}

BoundReport main_inequality_lmq(std::uint64_t l, std::uint64_t m, std::uint64_t q,
                                const arith::FactorBudget& budget) {
  const std::uint64_t p = characteristic(q);
  if (m % p == 0) throw std::invalid_argument("main_inequality_lmq: p divides m");
  auto r = main_inequality(q, pow_u64(p, l) * m, WMode::kExact, 8, budget);
  r.id = ConditionId::kIpPcn2;
  r.l = l;
  r.m = m;
  r.triple = true;
  return r;
}

BoundReport cond1(std::uint64_t q, std::uint64_t n, const arith::FactorBudget& budget) {
  Side lhs, rhs;
  lhs.coeff = ip1_bracket(q, n);
  lhs.times_pow(rq(q), frac(n, 2));
  rhs.coeff = Rational(exact_w(q, n, budget));
  rhs.times_pow(2, Rational(t_of(n) - 1));
  auto r = finish(ConditionId::kCond1, lhs, Relation::kGreaterEqual, rhs);
  r.q = q;
  r.n = n;
  return r;
}

BoundReport cond2(std::uint64_t n, std::uint64_t q, bool use_robin, arith::RobinConstant constant) {
  if (n < 2 || q < 2) throw std::invalid_argument("cond2 needs n >= 2 and q >= 2");
  Side lhs, rhs;
  lhs.coeff = ip1_bracket(q, n);
  lhs.times_pow(rq(q), frac(3 * n, 8));
  rhs.coeff = dec("4514.7");
  BoundReport r;
  if (use_robin) {
    if (n < 3) throw std::invalid_argument("Robin bound needs n >= 3");
    rhs.times(Rational(1, 2));
    rhs.log_extra = [n, constant](mpfr_prec_t prec) {
      return arith::robin_upper(n, prec, constant) * RealEnclosure::ln2(prec);
    };
    r = finish(ConditionId::kCond2Robin, lhs, Relation::kGreater, rhs);
  } else {
    rhs.times_pow(2, Rational(t_of(n) - 1));
    r = finish(ConditionId::kCond2, lhs, Relation::kGreaterEqual, rhs);
  }
  r.q = q;
  r.n = n;
  return r;
}

BoundReport cond3(std::uint64_t q, std::uint64_t n, W3Mode mode, const arith::FactorBudget& budget) {
  Side lhs, rhs;
  lhs.coeff = cn_lower(q, n, CnVariant::kGeneral) / Rational(big_pow(q, n));
  lhs.coeff.canonicalize();
  lhs.times_pow(rq(q), frac(n, 2));
  rhs.coeff = divisor_product(q, n);
  if (mode == W3Mode::kExact) {
    rhs.times(Rational(exact_w(q, n, budget)));
  } else {
    append_c_constant(rhs, q, n, 16);
    rhs.times_pow(rq(q), frac(n, 16));
  }
  auto r = finish(mode == W3Mode::kExact ? ConditionId::kCond3ExactW : ConditionId::kCond3C16, lhs,
                  Relation::kGreater, rhs);
  r.q = q;
  r.n = n;
  return r;
}

BoundReport cond_p_family(std::uint64_t l, std::uint64_t m, std::uint64_t q, Family which) {
  const std::uint64_t p = characteristic(q);
  if (l == 0 || m == 0) throw std::invalid_argument("cond_p_family needs l >= 1 and m >= 1");
  if (m % p == 0) throw std::invalid_argument("cond_p_family: p divides m");
  Side lhs, rhs;
  ConditionId id{};
  const BigInt t = t_of(m);
  switch (which) {
    case Family::kCond2POdd:
      if (p == 2) throw std::invalid_argument("cond_2_p_odd needs odd characteristic");
      id = ConditionId::kCond2POdd;
      lhs.coeff = ip2_bracket(q, p, m);
      lhs.times_pow(rq(q), fracb(3 * big_pow(p, l) * big_from_u64(m), 8));
      rhs.coeff = dec("2257.35");
      rhs.times_pow(2, Rational(BigInt(l + 1) * t));
      break;
    case Family::kCond3P2:
      if (p != 2) throw std::invalid_argument("cond_3_p2 needs characteristic 2");
      id = ConditionId::kCond3P2;
      lhs.coeff = ip3_bracket(q, m);
      lhs.times_pow(rq(q), frac(3 * pow_u64(2, l) * m, 8));
      rhs.coeff = dec("2461.62");
      rhs.times_pow(2, Rational(BigInt(l + 1) * t - 1));
      break;
    case Family::kA12:
      if (p != 2 || l != 1) throw std::invalid_argument("a12 needs characteristic 2 and l = 1");
      id = ConditionId::kCondA12;
      lhs.coeff = ip3_bracket(q, m);
      lhs.times_pow(rq(q), frac(5 * 2 * m, 12));
      rhs.coeff = dec("5.61e23") / 2;
      rhs.times_pow(2, Rational(2 * t));
      break;
  }
  auto r = finish(id, lhs, Relation::kGreaterEqual, rhs);
  r.q = q;
  r.l = l;
  r.m = m;
  const BigInt n = big_pow(p, l) * big_from_u64(m);
  r.n = fits_u64(n) ? big_to_u64(n) : 0;  // 0: too large to record
  r.triple = true;
  return r;
}

BoundReport cond_p_odd_floor(std::uint64_t l, std::uint64_t m, std::uint64_t q) {
  Side lhs, rhs;
  lhs.coeff = 1 - rq(m) * (inv_pow(q, 1) + inv_pow(q, 2) + inv_pow(q, 3) + 4 * inv_pow(q, 6));
  lhs.coeff.canonicalize();
  lhs.times_pow(rq(q), frac(3 * pow_u64(3, l) * m, 8));
  rhs.coeff = dec("2257.35");
  rhs.times_pow(2, Rational(BigInt(l + 1) * t_of(m)));
  auto r = finish(ConditionId::kCond2POdd, lhs, Relation::kGreaterEqual, rhs);
  r.q = q;
  r.l = l;
  r.m = m;
  r.triple = true;
  return r;
}

BoundReport robin_reduction(Family which, std::uint64_t l, std::uint64_t m) {
  if (m < 3) throw std::invalid_argument("robin_reduction needs m >= 3");
  Side lhs, rhs;
  lhs.coeff = rq(m);
  long log2_scale = 0;
  std::uint64_t B = m + 2;
  ConditionId id{};
  switch (which) {
    case Family::kCond2POdd:
      id = ConditionId::kCond2POdd;
      lhs.times_pow(rq(B), frac(pow_u64(3, l + 1) * m, 8) - 4);
      rhs.coeff = dec("2257.35");
      log2_scale = static_cast<long>(l + 1);
      break;
    case Family::kCond3P2:
      if (m % 2 == 0) throw std::invalid_argument("characteristic 2 needs odd m");
      id = ConditionId::kCond3P2;
      if (m <= 5) B = 8;
      lhs.times_pow(rq(B), frac(3 * pow_u64(2, l) * m, 8) - 3);
      rhs.coeff = 6 * dec("2461.62");
      log2_scale = static_cast<long>(l + 1);
      break;
    case Family::kA12:
      if (m % 2 == 0) throw std::invalid_argument("characteristic 2 needs odd m");
      id = ConditionId::kCondA12;
      l = 1;
      if (m <= 5) B = 8;
      lhs.times_pow(rq(B), frac(5 * m, 6) - 3);
      rhs.coeff = 12 * dec("2.81e23");
      log2_scale = 2;
      break;
  }
  rhs.log_extra = [m, log2_scale](mpfr_prec_t prec) {
    return arith::robin_upper(m, prec) * RealEnclosure::ln2(prec) * RealEnclosure::exact(log2_scale, prec);
  };
  auto r = finish(id, lhs, Relation::kGreaterEqual, rhs);
  r.robin_variant = true;
  r.q = B;
  r.l = l;
  r.m = m;
  r.triple = true;
  return r;
}

BoundReport cond_l1(std::uint64_t l, std::uint64_t m, std::uint64_t q, const arith::FactorBudget& budget) {
  const std::uint64_t p = characteristic(q);
  if (m % p == 0) throw std::invalid_argument("cond_l1: p divides m");
  const std::uint64_t n = pow_u64(p, l) * m;
  Side lhs, rhs;
  lhs.coeff = cn_lower(q, n, CnVariant::kGeneral);
  rhs.coeff = Rational(exact_w(q, n, budget));
  rhs.times_pow(rq(q), frac(n, 2));
  rhs.times_pow(2, Rational(BigInt(l + 1) * t_of(m) - 1));
  auto r = finish(ConditionId::kCondL1, lhs, Relation::kGreaterEqual, rhs);
  r.q = q;
  r.n = n;
  r.l = l;
  r.m = m;
  r.triple = true;
  return r;
}

}  // namespace pcnlab::bounds
