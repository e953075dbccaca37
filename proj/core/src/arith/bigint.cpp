#include "pcnlab/arith/bigint.hpp"

#include <cctype>
#include <stdexcept>

namespace pcnlab {

std::uint64_t big_to_u64(const BigInt& v) {
  if (!fits_u64(v)) throw std::overflow_error("value does not fit in 64 bits: " + v.get_str());
  std::uint64_t out = 0;
  std::size_t count = 0;
  mpz_export(&out, &count, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return count == 0 ? 0 : out;
}

BigInt big_pow(const BigInt& base, std::uint64_t exponent) {
  BigInt r;
  if (exponent > 0xffffffffULL) throw std::overflow_error("exponent too large");
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return r;
}

BigInt big_pow(std::uint64_t base, std::uint64_t exponent) {
  return big_pow(big_from_u64(base), exponent);
}

BigInt parse_decimal(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  for (std::size_t i = 0; i < s.size(); ++i) {
    const bool sign = (i == 0 && s[i] == '-');
    if (!sign && !std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw std::invalid_argument("malformed integer literal: " + s);
    }
  }
  return BigInt(s, 10);
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_decimal(const std::string& literal) {
  std::string mantissa = literal;
  long exp10 = 0;
  if (auto pos = literal.find_first_of("eE"); pos != std::string::npos) {
    mantissa = literal.substr(0, pos);
    exp10 = std::stol(literal.substr(pos + 1));
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (char c : mantissa) {
    if (c == '.') {
      if (seen_point) throw std::invalid_argument("malformed decimal: " + literal);
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw std::invalid_argument("malformed decimal: " + literal);
    }
  }
  if (digits.empty()) throw std::invalid_argument("malformed decimal: " + literal);
  Rational r(BigInt(digits, 10));
  const long shift = exp10 - frac_digits;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  if (shift >= 0) {
    r *= scale;
  } else {
    r /= scale;
  }
  r.canonicalize();
  return r;
}

}  // namespace pcnlab
