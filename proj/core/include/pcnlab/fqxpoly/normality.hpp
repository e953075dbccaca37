#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pcnlab/arith/numtheory.hpp"

namespace pcnlab::fqxpoly {

/// Operations the normality machinery needs from a field backend
/// (FieldCtx or SmallField).
template <class F>
concept FieldBackend = requires(const F& f, typename F::Elem a, typename F::Elem b, unsigned l) {
  { f.zero() } -> std::convertible_to<typename F::Elem>;
  { f.one() } -> std::convertible_to<typename F::Elem>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.add(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.sub(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.mul(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.inv(a) } -> std::convertible_to<typename F::Elem>;
  { f.frobenius(a, l) } -> std::convertible_to<typename F::Elem>;
  { f.n() } -> std::convertible_to<unsigned>;
};

/// Dense polynomials over the backend's field, ascending, no trailing zeros.
template <FieldBackend F>
class ExtPoly {
 public:
  using Elem = typename F::Elem;
  using Poly = std::vector<Elem>;

  explicit ExtPoly(const F& f) : f_(f) {}

  void trim(Poly& a) const {
    while (!a.empty() && f_.is_zero(a.back())) a.pop_back();
  }

  /// Remainder of a modulo b (b nonzero).
  Poly mod(Poly a, const Poly& b) const {
    const std::size_t db = b.size() - 1;
    const Elem lead_inv = f_.inv(b.back());
    trim(a);
    while (a.size() > db) {
      const Elem c = f_.mul(a.back(), lead_inv);
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t j = 0; j < db; ++j) a[shift + j] = f_.sub(a[shift + j], f_.mul(c, b[j]));
      a.pop_back();
      trim(a);
    }
    return a;
  }

  /// Degree of the gcd (-1 when both are zero).
  long gcd_degree(Poly a, Poly b) const { return static_cast<long>(gcd(std::move(a), std::move(b)).size()) - 1; }

  /// Unnormalized gcd.
  Poly gcd(Poly a, Poly b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      Poly r = mod(std::move(a), b);
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }

 private:
  const F& f_;
};

/// gcd(X^k - 1, sum_{i<k} x^(q^(l i)) X^i) == 1 with k = n/l.
template <FieldBackend F>
bool normality_test(const F& f, const typename F::Elem& x, unsigned l) {
  const unsigned n = f.n();
  if (l == 0 || n % l != 0) throw std::invalid_argument("normality_test: l = " + std::to_string(l) + " does not divide n");
  if (f.is_zero(x)) return false;
  const unsigned k = n / l;
  if (k == 1) return true;
  ExtPoly<F> ring(f);
  typename ExtPoly<F>::Poly A;
  A.reserve(k);
  A.push_back(x);
  for (unsigned i = 1; i < k; ++i) A.push_back(f.frobenius(A.back(), l));
  typename ExtPoly<F>::Poly B(k + 1, f.zero());
  B[0] = f.sub(f.zero(), f.one());
  B[k] = f.one();
  return ring.gcd_degree(std::move(B), std::move(A)) == 0;
}

/// Normal over F_{q^l} for every proper divisor l of n (x != 0).
template <FieldBackend F>
bool is_completely_normal(const F& f, const typename F::Elem& x) {
  if (f.is_zero(x)) return false;
  const unsigned n = f.n();
  for (std::uint64_t l : arith::divisors(n)) {
    if (l == n) continue;
    if (!normality_test(f, x, static_cast<unsigned>(l))) return false;
  }
  return true;
}

}  // namespace pcnlab::fqxpoly
