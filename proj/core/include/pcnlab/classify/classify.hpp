#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace pcnlab::classify {

enum class BasicReason { kMEquals1, kMDividesQMinus1, kNPrimeOrPrimeSquare, kTheoremCriterion };

std::string to_string(BasicReason r);

struct PairClass {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  bool completely_basic = false;
  std::optional<BasicReason> reason;  // set iff completely_basic
};

/// The full criterion: for every prime r | n, r does not divide ord_{(n/r)'}(q),
/// (n/r)' being the p-free part of n/r. q must be a prime power >= 2.
bool is_completely_basic(std::uint64_t q, std::uint64_t n);

/// Fast paths first (m = 1, m | q - 1, n = r or r^2 with n = p^l m, gcd(m, p) = 1),
/// then the full criterion.
PairClass classify_pair(std::uint64_t q, std::uint64_t n);

/// p-free part m of n for the characteristic of q.
std::uint64_t m_part(std::uint64_t q, std::uint64_t n);

}  // namespace pcnlab::classify
