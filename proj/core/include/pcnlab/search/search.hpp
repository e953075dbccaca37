#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pcnlab/arith/factor.hpp"
#include "pcnlab/ffield/field.hpp"

namespace pcnlab::search {

struct CountOptions {
  std::uint64_t cap = std::uint64_t{1} << 22;  // largest q^n enumerated
  arith::FactorBudget budget{};
  unsigned threads = 1;
};

struct Counts {
  std::uint64_t q = 0, n = 0;
  std::uint64_t size = 0;
  std::uint64_t primitive = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> normal_over;  // (l, #normal over F_{q^l}) for l | n
  std::uint64_t cn = 0;
  std::uint64_t pcn = 0;
};

/// Exact counts by enumerating every element of F_{q^n} with the default modulus.
/// Throws std::length_error above the cap and std::runtime_error when q^n - 1
/// cannot be factored within the budget.
Counts count_cn_pcn(std::uint64_t q, std::uint64_t n, const CountOptions& opt = {});

enum class Strategy { kExhaustive, kRandom };

struct SearchOptions {
  Strategy strategy = Strategy::kRandom;
  std::uint64_t max_trials = 1000000;  // random draws, or elements visited when exhaustive
  std::uint64_t seed = 1;
  arith::FactorBudget budget{};
};

struct PrimeCheck {
  BigInt prime;
  bool holds = false;  // x^((Q-1)/prime) != 1
  bool operator==(const PrimeCheck&) const = default;
};

struct NormalityCheck {
  std::uint64_t l = 0;
  bool coprime = false;  // gcd(sum sigma_l^i(x) X^i, X^(n/l) - 1) = 1
  bool operator==(const NormalityCheck&) const = default;
};

struct PcnCertificate {
  std::uint32_t p = 0;
  unsigned e = 0, n = 0;
  std::vector<std::uint32_t> modulus;  // over F_p, ascending, monic
  std::vector<std::uint32_t> element;  // coordinates in the power basis
  arith::IntFactorization order_factors;
  std::vector<PrimeCheck> primitivity_checks;
  std::vector<NormalityCheck> normality_divisors;  // every proper divisor of n
  Strategy strategy = Strategy::kRandom;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;

  bool operator==(const PcnCertificate&) const = default;
};

/// Failure to find an element within the budget (never a claim that none exists).
struct SearchExhausted : std::runtime_error {
  std::uint64_t trials;
  SearchExhausted(const std::string& what, std::uint64_t t) : std::runtime_error(what), trials(t) {}
};

/// Primitivity is tested before complete normality. Throws SearchExhausted,
/// std::runtime_error on factoring failure, std::length_error when an
/// exhaustive search is asked of a field above 2^32 elements.
PcnCertificate find_pcn(std::uint64_t q, std::uint64_t n, const SearchOptions& opt = {});

/// Builds the certificate for a given element; the checks record whatever they find.
PcnCertificate make_certificate(const ffield::FieldCtx& f, const ffield::FFElem& x,
                                const arith::IntFactorization& order_factors);

struct Verification {
  bool ok = false;
  std::string reason;  // "ok" or a failure code
};

/// Rebuilds the field from (p, e, n, modulus) and re-runs every check.
Verification verify_certificate(const PcnCertificate& cert);

std::string to_json(const PcnCertificate& cert, int indent = 2);
/// Throws std::invalid_argument on malformed input.
PcnCertificate certificate_from_json(const std::string& text);

std::string to_string(Strategy s);

}  // namespace pcnlab::search
