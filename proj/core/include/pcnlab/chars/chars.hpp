#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "pcnlab/ffield/small_field.hpp"

namespace pcnlab::chars {

using Complex = std::complex<double>;
using Elem = ffield::SmallField::Elem;
using Poly = std::vector<Elem>;  // ascending coefficients in the subfield F_{q^l}, as field logs

/// X^{n/l} - 1 over F_{q^l} split into irreducible factors of X^{m'} - 1, each
/// appearing with the same multiplicity; divisors are exponent vectors.
struct DivisorLattice {
  unsigned l = 0, k = 0;  // k = n/l
  std::uint64_t Q = 0;    // q^l
  unsigned m_prime = 0, multiplicity = 0;
  std::vector<Poly> factors;  // monic, by ascending degree
  std::vector<std::vector<unsigned>> divisors;
  std::vector<Poly> divisor_polys;

  unsigned degree(const std::vector<unsigned>& ex) const;
  int mobius(const std::vector<unsigned>& ex) const;
  double euler_phi(const std::vector<unsigned>& ex) const;  // number of residues coprime to the divisor
  std::vector<unsigned> full() const { return std::vector<unsigned>(factors.size(), multiplicity); }
};

struct AdditiveCharOrder {
  Elem a = 0;
  unsigned l = 0;
  std::vector<unsigned> exponents;  // over DivisorLattice::factors
  Poly order_poly;
};

/// Characters of F_{q^n} for q^n <= 2^12. chi_j(g^k) = exp(2 pi i jk / (q^n - 1)),
/// chi_j(0) = [j == 0]; psi_a(x) = exp(2 pi i Tr(ax) / p).
class CharSystem {
 public:
  static constexpr std::uint64_t kMaxSize = 4096;

  /// Throws std::length_error above kMaxSize.
  CharSystem(std::uint32_t p, unsigned e, unsigned n);

  const ffield::SmallField& field() const { return f_; }
  std::uint32_t size() const { return f_.size(); }
  std::uint32_t group_order() const { return f_.order(); }

  Complex chi(std::uint32_t j, Elem x) const;
  Complex psi(Elem a, Elem x) const;
  std::uint32_t trace(Elem x) const { return f_.is_zero(x) ? 0 : trace_[x]; }
  std::uint64_t chi_order(std::uint32_t j) const;

  const DivisorLattice& lattice(unsigned l) const;
  /// G o x = sum G_i x^{q^{l i}}.
  Elem apply(const Poly& G, Elem x, unsigned l) const;
  /// Least divisor G of X^{n/l} - 1 killing psi_a. Uses the trace adjoint:
  /// psi_a(G o x) = psi(sum G_i a^{q^{-l i}} x).
  AdditiveCharOrder additive_order(Elem a, unsigned l) const;

  /// Vinogradov's characteristic function at every element (index = log, zero last).
  std::vector<double> omega_all() const;
  std::vector<double> Omega_all(unsigned l) const;

 private:
  ffield::SmallField f_;
  std::vector<std::uint32_t> trace_;
  std::vector<DivisorLattice> lattices_;  // one per divisor of n, ascending
};

struct SelfTestReport {
  std::uint32_t p = 0;
  unsigned e = 0, n = 0;
  std::uint32_t size = 0;
  double orth_mult = 0, orth_mult_dual = 0, orth_add = 0;  // worst |sum| over nontrivial cases
  double orth_tol_mult = 0, orth_tol_add = 0;
  double gauss_rel = 0;  // worst | |G| - q^{n/2} | / q^{n/2}
  std::uint64_t gauss_pairs = 0;
  double omega_dev = 0, omega_zero = 0, theta = 0;
  double Omega_dev = 0, Omega_zero = 0, Omega_sum_rel = 0;
  std::uint64_t order_count_mismatches = 0, order_classes = 0;
  bool lattice_shape_ok = true;
  double cn_identity_dev = 0, cn_constrained_dev = 0;  // n >= 2 only
  std::uint64_t cn = 0;

  bool passed() const;
};

SelfTestReport orthogonality_check(const CharSystem& sys);
SelfTestReport gauss_magnitude_check(const CharSystem& sys);
SelfTestReport characteristic_function_check(const CharSystem& sys);
SelfTestReport order_count_check(const CharSystem& sys);
/// Every check above, merged.
SelfTestReport self_test(std::uint32_t p, unsigned e, unsigned n);

}  // namespace pcnlab::chars
