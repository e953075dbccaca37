#include "pcnlab/arith/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pcnlab/arith/primality.hpp"

namespace pcnlab::arith {
namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t rho_u64(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    const std::uint64_t m = 128;
    auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = rho_u64(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
  if (modulus == 1) return 0;
  std::uint64_t r = 1;
  base %= modulus;
  while (exponent) {
    if (exponent & 1) r = mulmod(r, base, modulus);
    base = mulmod(base, base, modulus);
    exponent >>= 1;
  }
  return r;
}

SmallFactorization factor_u64(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factor_u64: n must be positive");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  for (std::uint64_t p = 53; p < 1000 && p * p <= n; p += 2) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  SmallFactorization out;
  for (std::uint64_t p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> divs{1};
  for (auto [p, e] : factor_u64(n)) {
    const std::size_t size = divs.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < size; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

BigInt sigma_t(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("sigma_t: n must be positive");
  BigInt total = 1;
  for (auto [p, e] : factor_u64(n)) {
    BigInt term = 1, pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= big_from_u64(p);
      term += pk;
    }
    total *= term;
  }
  return total;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (auto [p, e] : factor_u64(n)) phi = phi / p * (p - 1);
  return phi;
}

int mobius(std::uint64_t n) {
  int mu = 1;
  for (auto [p, e] : factor_u64(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::uint64_t mult_order(std::uint64_t q, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("mult_order: modulus must be positive");
  if (std::gcd(q % m, m) != 1 && m != 1) throw std::invalid_argument("mult_order: gcd(q, m) != 1");
  if (m == 1) return 1;
  // Group order phi(m), then strip prime factors while q^(order/r) = 1.
  std::uint64_t order = 1;
  SmallFactorization phi_factors;
  {
    std::vector<std::uint64_t> primes;
    for (auto [p, e] : factor_u64(m)) {
      std::uint64_t pk = 1;
      for (unsigned k = 1; k < e; ++k) pk *= p;
      order *= pk * (p - 1);
      for (unsigned k = 1; k < e; ++k) primes.push_back(p);
      for (auto [r, f] : factor_u64(p - 1 == 0 ? 1 : p - 1)) {
        for (unsigned k = 0; k < f; ++k) primes.push_back(r);
      }
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (auto r : primes) phi_factors.emplace_back(r, 0);
  }
  const std::uint64_t qm = q % m;
  for (auto [r, unused] : phi_factors) {
    while (order % r == 0 && powmod_u64(qm, order / r, m) == 1) order /= r;
  }
  return order;
}

std::uint64_t mult_order(const BigInt& q, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("mult_order: modulus must be positive");
  BigInt r;
  mpz_mod(r.get_mpz_t(), q.get_mpz_t(), big_from_u64(m).get_mpz_t());
  return mult_order(big_to_u64(r), m);
}

std::uint64_t p_free_part(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw std::invalid_argument("p_free_part: n must be positive");
  if (p < 2) throw std::invalid_argument("p_free_part: p must be prime");
  while (n % p == 0) n /= p;
  return n;
}

std::optional<PrimePowerForm> prime_power_form(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto f = factor_u64(q);
  if (f.size() != 1) return std::nullopt;
  return PrimePowerForm{f[0].first, f[0].second};
}

std::vector<std::uint64_t> prime_powers_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || lo > hi) return out;
  for (std::uint64_t p : primes_up_to(hi)) {
    for (std::uint64_t pk = p;; pk *= p) {
      if (pk >= lo) out.push_back(pk);
      if (pk > hi / p) break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::remove_if(out.begin(), out.end(), [&](std::uint64_t v) { return v < lo || v > hi; }),
            out.end());
  return out;
}

std::uint64_t next_prime_power(std::uint64_t x) {
  if (x <= 2) return 2;
  while (!is_prime_power(x)) ++x;
  return x;
}

bool is_prime_or_prime_square(std::uint64_t n) {
  auto f = prime_power_form(n);
  return f && f->e <= 2;
}

std::vector<std::uint64_t> small_prime_divisors(std::uint64_t q, std::uint64_t n, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  auto consider = [&](std::uint64_t r) {
    if (q % r == 0) return;
    if (powmod_u64(q % r, n, r) == 1) out.push_back(r);
  };
  if (bound < 1000000) {
    for (std::uint32_t r : small_primes()) {
      if (r > bound) break;
      consider(r);
    }
  } else {
    for (std::uint32_t r : primes_up_to(bound)) consider(r);
  }
  return out;
}

BigInt cyclotomic_value(std::uint64_t d, const BigInt& x) {
  if (d == 0) throw std::invalid_argument("cyclotomic_value: d must be positive");
  // Phi_d(x) = prod_{k | d} (x^(d/k) - 1)^mu(k)
  BigInt num = 1, den = 1;
  for (std::uint64_t k : divisors(d)) {
    const int mu = mobius(k);
    if (mu == 0) continue;
    BigInt term = big_pow(x, d / k) - 1;
    if (mu > 0) {
      num *= term;
    } else {
      den *= term;
    }
  }
  if (den == 0) throw std::domain_error("cyclotomic_value: degenerate evaluation point");
  BigInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

}  // namespace pcnlab::arith
