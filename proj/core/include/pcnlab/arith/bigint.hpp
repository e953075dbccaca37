#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace pcnlab {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt big_from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

// Throws std::overflow_error when v does not fit.
std::uint64_t big_to_u64(const BigInt& v);

inline bool fits_u64(const BigInt& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

BigInt big_pow(const BigInt& base, std::uint64_t exponent);
BigInt big_pow(std::uint64_t base, std::uint64_t exponent);

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }
BigInt parse_decimal(const std::string& s);

// Rational with both parts as decimal strings, e.g. "45147/10".
std::string to_string(const Rational& r);

// Exact rational from a decimal literal such as "4514.7" or "5.61e23".
Rational rational_from_decimal(const std::string& literal);

}  // namespace pcnlab
