#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pcnlab/arith/bigint.hpp"

namespace pcnlab::arith {

enum class Primality {
  kComposite,
  kPrime,          // deterministic Miller-Rabin (value < 3.317e24)
  kProbablePrime,  // passed BPSW; not proven
};

/// Primes below 10^6, computed once.
std::span<const std::uint32_t> small_primes();

/// Primes up to `limit` (inclusive) by a plain sieve.
std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);

bool is_prime_u64(std::uint64_t n);

/// Deterministic below 3.317e24 (Miller-Rabin, bases 2..41); above that a
/// strong BPSW test whose positive answer is labelled kProbablePrime.
Primality primality(const BigInt& n);

inline bool is_prime(const BigInt& n) { return primality(n) != Primality::kComposite; }

namespace detail {
bool miller_rabin(const BigInt& n, unsigned long base);
bool strong_lucas_selfridge(const BigInt& n);
}  // namespace detail

}  // namespace pcnlab::arith
