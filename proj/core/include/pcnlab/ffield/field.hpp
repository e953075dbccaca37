#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "pcnlab/arith/bigint.hpp"
#include "pcnlab/arith/factor.hpp"
#include "pcnlab/ffield/poly_fp.hpp"

namespace pcnlab::ffield {

/// Element of F_p[x]/(f): e*n coordinates in ascending powers of x.
struct FFElem {
  std::vector<std::uint32_t> coords;
  bool operator==(const FFElem&) const = default;
};

/// F_{q^n} with q = p^e, modelled as F_p[x]/(f), deg f = e*n.
/// Immutable after construction except for the lazily computed factorization
/// of q^n - 1, which is computed at most once and is thread safe.
class FieldCtx {
 public:
  using Elem = FFElem;

  FieldCtx(std::uint32_t p, unsigned e, unsigned n, std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t p() const { return p_; }
  unsigned e() const { return e_; }
  unsigned n() const { return n_; }
  unsigned degree() const { return deg_; }  // e*n
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }  // monic, ascending, length deg+1
  std::uint64_t q() const { return q_; }
  const BigInt& size() const { return size_; }
  const BigInt& group_order() const { return group_order_; }
  const PolyFp& polys() const { return polys_; }

  /// Factorization of q^n - 1, computed on first use with the given budget.
  /// Throws std::runtime_error if it cannot be completed.
  const arith::IntFactorization& group_order_factors(const arith::FactorBudget& budget = {}) const;
  /// Install a known factorization (must match q^n - 1 and be complete).
  void set_group_order_factors(arith::IntFactorization f) const;

  FFElem zero() const;
  FFElem one() const;
  FFElem from_fp(std::uint32_t c) const;
  /// The class of x (the polynomial generator); equals a constant when deg f = 1.
  FFElem gen() const;
  FFElem from_coords(std::vector<std::uint32_t> coords) const;
  /// Base-p digits of idx as coordinates; idx < p^(e n).
  FFElem from_index(std::uint64_t idx) const;
  std::uint64_t to_index(const FFElem& x) const;
  FFElem random(std::mt19937_64& rng) const;

  bool is_zero(const FFElem& x) const;
  bool is_one(const FFElem& x) const { return x == one(); }
  FFElem add(const FFElem& a, const FFElem& b) const;
  FFElem sub(const FFElem& a, const FFElem& b) const;
  FFElem neg(const FFElem& a) const;
  FFElem scale(const FFElem& a, std::uint32_t c) const;
  FFElem mul(const FFElem& a, const FFElem& b) const;
  FFElem sqr(const FFElem& a) const { return mul(a, a); }
  FFElem inv(const FFElem& a) const;  // throws std::domain_error on zero
  FFElem pow(const FFElem& a, const BigInt& exponent) const;
  FFElem pow(const FFElem& a, std::uint64_t exponent) const;

  /// x^p through the precomputed linear map.
  FFElem frob_p(const FFElem& x) const;
  /// x^(q^l) for l | n.
  FFElem frobenius(const FFElem& x, unsigned l) const;
  /// x^(q^(l*k)) for l | n and any k >= 0.
  FFElem frobenius_iter(const FFElem& x, unsigned l, std::uint64_t k) const;
  /// Absolute trace Tr_{F_{q^n}/F_p}(x).
  std::uint32_t trace_fp(const FFElem& x) const;

  bool is_primitive(const FFElem& x) const;
  /// Least k with g^k = y; field size must be at most 2^24.
  std::uint64_t discrete_log(const FFElem& g, const FFElem& y) const;

 private:
  struct LinearMap {
    unsigned l = 0;
    std::vector<std::uint32_t> cols;  // deg*deg, column j = image of x^j
  };
  FFElem apply(const LinearMap& m, const FFElem& x) const;
  const LinearMap& frob_map(unsigned l) const;
  void check(const FFElem& x) const;

  std::uint32_t p_;
  unsigned e_, n_, deg_;
  std::uint64_t q_;
  BigInt size_, group_order_;
  std::vector<std::uint32_t> modulus_;
  PolyFp polys_;
  LinearMap frob_p_;
  std::vector<LinearMap> frob_l_;       // one per divisor l of n
  std::vector<std::uint32_t> trace_basis_;  // Tr(x^j)

  struct FactorSlot;
  std::shared_ptr<FactorSlot> factors_;
};

FieldCtx make_field(std::uint32_t p, unsigned e, unsigned n,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

/// Lexicographically least monic irreducible of the given degree over F_p,
/// ordering candidates by the integer sum c_i p^i of their lower coefficients.
std::vector<std::uint32_t> least_irreducible(std::uint32_t p, unsigned degree);

}  // namespace pcnlab::ffield
