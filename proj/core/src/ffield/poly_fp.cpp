#include "pcnlab/ffield/poly_fp.hpp"

#include <stdexcept>

#include "pcnlab/arith/numtheory.hpp"

namespace pcnlab::ffield {

PolyFp::Coeffs PolyFp::trim(Coeffs a) const {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

PolyFp::Coeffs PolyFp::add(const Coeffs& a, const Coeffs& b) const {
  Coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t s = (i < a.size() ? a[i] : 0);
    s += (i < b.size() ? b[i] : 0);
    r[i] = static_cast<std::uint32_t>(s % p_);
  }
  return trim(std::move(r));
}

PolyFp::Coeffs PolyFp::sub(const Coeffs& a, const Coeffs& b) const {
  Coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::uint64_t x = (i < a.size() ? a[i] : 0);
    const std::uint64_t y = (i < b.size() ? b[i] : 0);
    r[i] = static_cast<std::uint32_t>((x + p_ - y) % p_);
  }
  return trim(std::move(r));
}

PolyFp::Coeffs PolyFp::mul(const Coeffs& a, const Coeffs& b) const {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p_;
    }
  }
  Coeffs r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint32_t>(acc[i]);
  return trim(std::move(r));
}

PolyFp::Coeffs PolyFp::scale(const Coeffs& a, std::uint32_t c) const {
  Coeffs r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[i]) * c % p_);
  return trim(std::move(r));
}

std::uint32_t PolyFp::inv_scalar(std::uint32_t a) const {
  if (a % p_ == 0) throw std::domain_error("PolyFp: inverse of zero scalar");
  return static_cast<std::uint32_t>(arith::powmod_u64(a, p_ - 2, p_));
}

void PolyFp::divmod(const Coeffs& a, const Coeffs& b, Coeffs* quot, Coeffs* rem) const {
  if (b.empty()) throw std::domain_error("PolyFp: division by zero polynomial");
  std::vector<std::uint64_t> r(a.begin(), a.end());
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inv_scalar(b.back());
  Coeffs q(a.size() >= b.size() ? a.size() - db : 0, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::uint64_t c = r[i] % p_ * lead_inv % p_;
    if (c == 0) continue;
    q[i - db] = static_cast<std::uint32_t>(c);
    for (std::size_t j = 0; j <= db; ++j) {
      r[i - db + j] = (r[i - db + j] + (p_ - c) * b[j]) % p_;
    }
  }
  if (quot) *quot = trim(std::move(q));
  if (rem) {
    Coeffs out(std::min(r.size(), db));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint32_t>(r[i] % p_);
    *rem = trim(std::move(out));
  }
}

PolyFp::Coeffs PolyFp::mod(const Coeffs& a, const Coeffs& b) const {
  Coeffs r;
  divmod(a, b, nullptr, &r);
  return r;
}

PolyFp::Coeffs PolyFp::make_monic(const Coeffs& a) const {
  if (a.empty()) return a;
  return scale(a, inv_scalar(a.back()));
}

PolyFp::Coeffs PolyFp::gcd(Coeffs a, Coeffs b) const {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    Coeffs r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

PolyFp::Coeffs PolyFp::mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& m) const { return mod(mul(a, b), m); }

PolyFp::Coeffs PolyFp::powmod(const Coeffs& base, std::uint64_t e, const Coeffs& m) const {
  Coeffs result = mod(Coeffs{1}, m);
  Coeffs b = mod(base, m);
  while (e) {
    if (e & 1) result = mulmod(result, b, m);
    e >>= 1;
    if (e) b = mulmod(b, b, m);
  }
  return result;
}

PolyFp::Coeffs PolyFp::invmod(const Coeffs& a, const Coeffs& m) const {
  // Extended Euclid tracking the coefficient of a.
  Coeffs r0 = trim(m), r1 = mod(a, m);
  Coeffs s0, s1{1};
  while (!r1.empty()) {
    Coeffs q, r;
    divmod(r0, r1, &q, &r);
    Coeffs s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw std::domain_error("PolyFp: element not invertible");
  return mod(scale(s0, inv_scalar(r0[0])), m);
}

bool PolyFp::is_irreducible(const Coeffs& f) const {
  if (f.size() < 2 || f.back() != 1) throw std::invalid_argument("is_irreducible: expects a monic polynomial of degree >= 1");
  const std::uint64_t deg = f.size() - 1;
  if (deg == 1) return true;
  const Coeffs x{0, 1};
  // x^(p^k) mod f for k = 1..deg
  std::vector<Coeffs> frob_powers(deg + 1);
  frob_powers[0] = mod(x, f);
  for (std::uint64_t k = 1; k <= deg; ++k) frob_powers[k] = powmod(frob_powers[k - 1], p_, f);
  if (frob_powers[deg] != frob_powers[0]) return false;
  for (auto [r, unused] : arith::factor_u64(deg)) {
    Coeffs g = gcd(sub(frob_powers[deg / r], x), f);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace pcnlab::ffield
