#pragma once

#include <cstdint>
#include <vector>

#include "pcnlab/arith/bigint.hpp"
#include "pcnlab/arith/primality.hpp"

namespace pcnlab::arith {

struct FactorBudget {
  std::uint64_t trial_bound = 1000000;        // trial division by primes below this
  std::uint64_t rho_iterations = 10000000;    // per composite cofactor
};

struct PrimeFactor {
  BigInt prime;
  unsigned exponent = 0;
  Primality certainty = Primality::kPrime;

  bool operator==(const PrimeFactor&) const = default;
};

/// Factorization of a positive integer. When `complete` is false the
/// unresolved part is kept in `cofactor` (> 1); it is not necessarily prime.
struct IntFactorization {
  BigInt value = 1;
  std::vector<PrimeFactor> factors;  // strictly increasing primes
  bool complete = true;
  BigInt cofactor = 1;

  BigInt product() const;
  bool any_probable_prime() const;
  std::vector<BigInt> distinct_primes() const;

  bool operator==(const IntFactorization&) const = default;
};

IntFactorization factor_int(const BigInt& n, const FactorBudget& budget = {});

/// Pollard-Brent rho. Returns a nontrivial factor of composite n, or 0 when
/// the iteration budget runs out.
BigInt pollard_brent(const BigInt& n, std::uint64_t max_iterations, unsigned long seed = 1);

struct QnMinus1Split {
  std::uint64_t d;   // index of the cyclotomic factor Phi_d(p)
  BigInt value;      // Phi_d(p)
};

/// q^n - 1 = prod_{d | e n} Phi_d(p) for q = p^e; each factor has magnitude
/// at most p^phi(d) and is factored separately.
std::vector<QnMinus1Split> cyclotomic_split(std::uint64_t q, std::uint64_t n);

IntFactorization factor_qn_minus_1(std::uint64_t q, std::uint64_t n, const FactorBudget& budget = {});

/// Radical (product of distinct primes) of a factored integer and derived data.
struct RadicalInfo {
  BigInt radical = 1;
  unsigned num_primes = 0;
  BigInt num_divisors = 1;  // W(radical) = 2^num_primes
  Rational theta = 1;       // phi(radical) / radical
};

/// Throws std::invalid_argument on an incomplete factorization.
RadicalInfo radical_info(const IntFactorization& f);

/// Checks the structural invariants (product, ordering, primality of factors).
bool validate(const IntFactorization& f);

}  // namespace pcnlab::arith
