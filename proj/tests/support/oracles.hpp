#pragma once

// Slow, independent reference implementations used only to cross-check the library.

#include <cstdint>
#include <utility>
#include <vector>

#include "pcnlab/arith/bigint.hpp"
#include "pcnlab/ffield/field.hpp"

namespace oracle {

bool is_prime_trial(std::uint64_t n);
std::vector<std::pair<std::uint64_t, unsigned>> factor_trial(std::uint64_t n);
pcnlab::BigInt sigma_naive(std::uint64_t n);
std::uint64_t phi_naive(std::uint64_t n);
std::size_t divisor_count_naive(std::uint64_t n);
std::uint64_t mult_order_naive(std::uint64_t q, std::uint64_t m);

/// Rank over F_p of the F_p-span of {b * x^(q^(l i)) : b in basis of F_{q^l}, 0 <= i < n/l}.
/// x is normal over F_{q^l} iff the rank is the full degree e*n.
unsigned normal_rank(const pcnlab::ffield::FieldCtx& f, const pcnlab::ffield::FFElem& x, unsigned l);
bool is_normal_by_rank(const pcnlab::ffield::FieldCtx& f, const pcnlab::ffield::FFElem& x, unsigned l);

/// F_p-basis of the subfield fixed by x -> x^(q^l), found as the kernel of (sigma_l - id).
std::vector<pcnlab::ffield::FFElem> subfield_basis(const pcnlab::ffield::FieldCtx& f, unsigned l);

/// Multiplicative order by repeated multiplication.
std::uint64_t element_order_naive(const pcnlab::ffield::FieldCtx& f, const pcnlab::ffield::FFElem& x);

}  // namespace oracle
