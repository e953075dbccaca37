#include "pcnlab/classify/classify.hpp"

#include <stdexcept>

#include "pcnlab/arith/numtheory.hpp"

namespace pcnlab::classify {

namespace {

std::uint64_t characteristic(std::uint64_t q) {
  auto form = arith::prime_power_form(q);
  if (!form) throw std::invalid_argument("classify: q = " + std::to_string(q) + " is not a prime power");
  return form->p;
}

}  // namespace

std::string to_string(BasicReason r) {
  switch (r) {
    case BasicReason::kMEquals1: return "m_equals_1";
    case BasicReason::kMDividesQMinus1: return "m_divides_q_minus_1";
    case BasicReason::kNPrimeOrPrimeSquare: return "n_prime_or_prime_square";
    case BasicReason::kTheoremCriterion: return "theorem_criterion";
  }
  return "?";
}

std::uint64_t m_part(std::uint64_t q, std::uint64_t n) { return arith::p_free_part(n, characteristic(q)); }

bool is_completely_basic(std::uint64_t q, std::uint64_t n) {
  const std::uint64_t p = characteristic(q);
  if (n == 0) throw std::invalid_argument("classify: n must be positive");
  for (auto [r, unused] : arith::factor_u64(n)) {
    const std::uint64_t m = arith::p_free_part(n / r, p);
    if (arith::mult_order(q, m) % r == 0) return false;
  }
  return true;
}

PairClass classify_pair(std::uint64_t q, std::uint64_t n) {
  PairClass c{q, n, false, std::nullopt};
  const std::uint64_t m = m_part(q, n);
  if (m == 1) {
    c.reason = BasicReason::kMEquals1;
  } else if ((q - 1) % m == 0) {
    c.reason = BasicReason::kMDividesQMinus1;
  } else if (arith::is_prime_or_prime_square(n)) {
    c.reason = BasicReason::kNPrimeOrPrimeSquare;
  } else if (is_completely_basic(q, n)) {
    c.reason = BasicReason::kTheoremCriterion;
  }
  c.completely_basic = c.reason.has_value();
  return c;
}

}  // namespace pcnlab::classify
