#pragma once

#include <cstdint>
#include <vector>

namespace pcnlab::ffield {

/// Polynomials over F_p, ascending coefficients, no trailing zeros (the zero
/// polynomial is empty). p must be a prime below 2^31.
class PolyFp {
 public:
  using Coeffs = std::vector<std::uint32_t>;

  explicit PolyFp(std::uint32_t p) : p_(p) {}

  std::uint32_t p() const { return p_; }

  Coeffs trim(Coeffs a) const;
  Coeffs add(const Coeffs& a, const Coeffs& b) const;
  Coeffs sub(const Coeffs& a, const Coeffs& b) const;
  Coeffs mul(const Coeffs& a, const Coeffs& b) const;
  Coeffs scale(const Coeffs& a, std::uint32_t c) const;
  /// Quotient and remainder; b must be nonzero.
  void divmod(const Coeffs& a, const Coeffs& b, Coeffs* quot, Coeffs* rem) const;
  Coeffs mod(const Coeffs& a, const Coeffs& b) const;
  /// Monic gcd (empty when both are zero).
  Coeffs gcd(Coeffs a, Coeffs b) const;
  Coeffs make_monic(const Coeffs& a) const;
  Coeffs mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& m) const;
  /// base^e mod m for a 64-bit exponent.
  Coeffs powmod(const Coeffs& base, std::uint64_t e, const Coeffs& m) const;
  /// Inverse of a modulo m (gcd must be 1); throws std::domain_error otherwise.
  Coeffs invmod(const Coeffs& a, const Coeffs& m) const;

  std::uint32_t inv_scalar(std::uint32_t a) const;

  /// Rabin's irreducibility test for a monic polynomial of degree >= 1.
  bool is_irreducible(const Coeffs& f) const;

 private:
  std::uint32_t p_;
};

}  // namespace pcnlab::ffield
