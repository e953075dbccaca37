#include "pcnlab/arith/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "pcnlab/arith/numtheory.hpp"

namespace pcnlab::arith {

BigInt IntFactorization::product() const {
  BigInt out = cofactor;
  for (const auto& f : factors) {
    BigInt pk;
    mpz_pow_ui(pk.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
    out *= pk;
  }
  return out;
}

bool IntFactorization::any_probable_prime() const {
  return std::any_of(factors.begin(), factors.end(),
                     [](const PrimeFactor& f) { return f.certainty == Primality::kProbablePrime; });
}

std::vector<BigInt> IntFactorization::distinct_primes() const {
  std::vector<BigInt> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.prime);
  return out;
}

BigInt pollard_brent(const BigInt& n, std::uint64_t max_iterations, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  const BigInt c = seed;
  BigInt y = 2 + seed, x, ys, q = 1, g = 1, diff;
  const std::uint64_t m = 256;
  std::uint64_t r = 1, spent = 0;
  auto step = [&](BigInt& v) {
    v *= v;
    v += c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  do {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) step(y);
    spent += r;
    std::uint64_t k = 0;
    do {
      ys = y;
      const std::uint64_t steps = std::min(m, r - k);
      for (std::uint64_t i = 0; i < steps; ++i) {
        step(y);
        diff = x - y;
        q *= diff;
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      spent += steps;
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    } while (k < r && g == 1);
    r <<= 1;
    if (spent > max_iterations && g == 1) return 0;
  } while (g == 1);
  if (g == n) {
    do {
      step(ys);
      diff = x - ys;
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  if (g == n) return 0;
  return g;
}

namespace {

struct Collected {
  std::map<BigInt, std::pair<unsigned, Primality>> primes;
  BigInt unresolved = 1;
};

void split_composite(const BigInt& n, const FactorBudget& budget, Collected& out) {
  std::vector<BigInt> stack{n};
  while (!stack.empty()) {
    BigInt c = stack.back();
    stack.pop_back();
    if (c == 1) continue;
    const Primality pr = primality(c);
    if (pr != Primality::kComposite) {
      auto& slot = out.primes[c];
      slot.first += 1;
      slot.second = pr;
      continue;
    }
    if (mpz_perfect_power_p(c.get_mpz_t())) {
      bool split = false;
      for (unsigned long k = mpz_sizeinbase(c.get_mpz_t(), 2); k >= 2 && !split; --k) {
        BigInt root;
        if (mpz_root(root.get_mpz_t(), c.get_mpz_t(), k)) {
          for (unsigned long i = 0; i < k; ++i) stack.push_back(root);
          split = true;
        }
      }
      if (split) continue;
    }
    BigInt d = 0;
    std::uint64_t left = budget.rho_iterations;
    for (unsigned long seed = 1; seed <= 8 && d == 0 && left > 0; ++seed) {
      const std::uint64_t slice = std::max<std::uint64_t>(left / 2, 1);
      d = pollard_brent(c, slice, seed);
      left = left > slice ? left - slice : 0;
    }
    if (d == 0) {
      out.unresolved *= c;
      continue;
    }
    stack.push_back(d);
    BigInt rest;
    mpz_divexact(rest.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    stack.push_back(rest);
  }
}

IntFactorization finish(const BigInt& value, Collected&& c) {
  IntFactorization f;
  f.value = value;
  for (auto& [p, info] : c.primes) f.factors.push_back({p, info.first, info.second});
  f.cofactor = c.unresolved;
  f.complete = (c.unresolved == 1);
  return f;
}

void trial_divide(BigInt& rest, const FactorBudget& budget, Collected& out) {
  for (std::uint32_t p : small_primes()) {
    if (p >= budget.trial_bound) break;
    if (rest == 1) break;
    if (BigInt(p) * p > rest) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e) {
      auto& slot = out.primes[BigInt(p)];
      slot.first += e;
      slot.second = Primality::kPrime;
    }
  }
}

}  // namespace

IntFactorization factor_int(const BigInt& n, const FactorBudget& budget) {
  if (n < 1) throw std::invalid_argument("factor_int: n must be >= 1");
  Collected c;
  BigInt rest = n;
  trial_divide(rest, budget, c);
  split_composite(rest, budget, c);
  return finish(n, std::move(c));
}

std::vector<QnMinus1Split> cyclotomic_split(std::uint64_t q, std::uint64_t n) {
  auto form = prime_power_form(q);
  if (!form) throw std::invalid_argument("cyclotomic_split: q must be a prime power");
  if (n == 0) throw std::invalid_argument("cyclotomic_split: n must be positive");
  const BigInt p = big_from_u64(form->p);
  std::vector<QnMinus1Split> out;
  for (std::uint64_t d : divisors(n * form->e)) out.push_back({d, cyclotomic_value(d, p)});
  return out;
}

IntFactorization factor_qn_minus_1(std::uint64_t q, std::uint64_t n, const FactorBudget& budget) {
  Collected c;
  const bool base2 = (q & (q - 1)) == 0;
  for (const auto& part : cyclotomic_split(q, n)) {
    std::vector<BigInt> pieces{part.value};
    if (base2 && part.d % 8 == 4 && part.d > 4) {
      // Aurifeuillian split: Phi_d(2) divides 2^(2j) + 1 = L * M for odd j = d/4,
      // with L, M = 2^j -+ 2^((j+1)/2) + 1 coprime.
      const std::uint64_t j = part.d / 4;
      const BigInt big = BigInt(1) << static_cast<mp_bitcnt_t>(j);
      const BigInt mid = BigInt(1) << static_cast<mp_bitcnt_t>((j + 1) / 2);
      BigInt g;
      const BigInt L = big - mid + 1;
      mpz_gcd(g.get_mpz_t(), part.value.get_mpz_t(), L.get_mpz_t());
      if (g > 1 && g < part.value) pieces = {g, BigInt(part.value / g)};
    }
    for (BigInt rest : pieces) {
      trial_divide(rest, budget, c);
      split_composite(rest, budget, c);
    }
  }
  return finish(big_pow(q, n) - 1, std::move(c));
}

RadicalInfo radical_info(const IntFactorization& f) {
  if (!f.complete) throw std::invalid_argument("radical_info: factorization of " + f.value.get_str() + " is incomplete");
  RadicalInfo info;
  BigInt phi = 1;
  for (const auto& pf : f.factors) {
    info.radical *= pf.prime;
    phi *= pf.prime - 1;
    ++info.num_primes;
  }
  mpz_ui_pow_ui(info.num_divisors.get_mpz_t(), 2, info.num_primes);
  info.theta = Rational(phi, info.radical);
  info.theta.canonicalize();
  return info;
}

bool validate(const IntFactorization& f) {
  if (f.product() != f.value) return false;
  if (f.complete != (f.cofactor == 1)) return false;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (f.factors[i].exponent == 0) return false;
    if (i > 0 && !(f.factors[i - 1].prime < f.factors[i].prime)) return false;
    if (primality(f.factors[i].prime) == Primality::kComposite) return false;
  }
  return true;
}

}  // namespace pcnlab::arith
