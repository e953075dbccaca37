#pragma once

#include <cstdint>
#include <vector>

#include "pcnlab/arith/bigint.hpp"

namespace pcnlab::fqxpoly {

/// Orbits of Z/mZ under multiplication by Q, each sorted, ordered by least element.
std::vector<std::vector<std::uint64_t>> cyclotomic_cosets(std::uint64_t m, std::uint64_t Q);

/// Shape of X^(n/l) - 1 over F_{q^l}: (X^m' - 1)^multiplicity with one
/// irreducible factor of X^m' - 1 per coset.
struct CycFactorization {
  std::uint64_t l = 0;
  std::uint64_t m_prime = 0;
  std::uint64_t multiplicity = 0;
  std::vector<std::uint64_t> coset_degrees;  // ascending
};

CycFactorization cyc_factorization(std::uint64_t q, std::uint64_t n, std::uint64_t l);

struct PolyStats {
  BigInt phi;      // phi_l(X^(n/l) - 1)
  BigInt W_sf;     // 2^(number of cosets)
  Rational theta;  // prod over cosets (1 - q^(-l deg))
};

/// q must be a power of p and l must divide n.
PolyStats poly_stats(std::uint64_t q, std::uint64_t p, std::uint64_t n, std::uint64_t l);

}  // namespace pcnlab::fqxpoly
