#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pcnlab/arith/bigint.hpp"

namespace pcnlab::arith {

using SmallFactorization = std::vector<std::pair<std::uint64_t, unsigned>>;

/// Complete factorization of a 64-bit value (trial division, then rho).
SmallFactorization factor_u64(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Sum of the positive divisors of n.
BigInt sigma_t(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
int mobius(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

/// Least k >= 1 with q^k = 1 (mod m). Throws std::invalid_argument if gcd(q, m) != 1.
std::uint64_t mult_order(const BigInt& q, std::uint64_t m);
std::uint64_t mult_order(std::uint64_t q, std::uint64_t m);

/// n with every factor p removed.
std::uint64_t p_free_part(std::uint64_t n, std::uint64_t p);

struct PrimePowerForm {
  std::uint64_t p;
  unsigned e;
};

/// (p, e) with q = p^e, or nullopt if q is not a prime power.
std::optional<PrimePowerForm> prime_power_form(std::uint64_t q);
inline bool is_prime_power(std::uint64_t q) { return prime_power_form(q).has_value(); }

/// All prime powers p^k (k >= 1) in [lo, hi], ascending.
std::vector<std::uint64_t> prime_powers_in(std::uint64_t lo, std::uint64_t hi);

/// Least prime power >= x.
std::uint64_t next_prime_power(std::uint64_t x);

bool is_prime_or_prime_square(std::uint64_t n);

/// Exactly the primes r <= bound with r | q^n - 1, found through q^n = 1 (mod r)
/// (equivalently ord_r(q) | n); q^n - 1 itself is never formed.
std::vector<std::uint64_t> small_prime_divisors(std::uint64_t q, std::uint64_t n, std::uint64_t bound);

/// Value of the d-th cyclotomic polynomial at x.
BigInt cyclotomic_value(std::uint64_t d, const BigInt& x);

}  // namespace pcnlab::arith
