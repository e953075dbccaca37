#include "pcnlab/ffield/field.hpp"

#include <bit>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "pcnlab/arith/numtheory.hpp"
#include "pcnlab/arith/primality.hpp"

namespace pcnlab::ffield {

struct FieldCtx::FactorSlot {
  std::mutex mu;
  std::optional<arith::IntFactorization> f;
};

std::vector<std::uint32_t> least_irreducible(std::uint32_t p, unsigned degree) {
  if (degree == 0) throw std::invalid_argument("least_irreducible: degree must be positive");
  PolyFp polys(p);
  std::vector<std::uint32_t> f(degree + 1, 0);
  f[degree] = 1;
  // Odometer over the lower coefficients, c_0 least significant.
  while (true) {
    if (degree == 1 || f[0] != 0) {
      if (polys.is_irreducible(f)) return f;
    }
    unsigned i = 0;
    while (i < degree && ++f[i] == p) f[i++] = 0;
    if (i == degree) throw std::logic_error("least_irreducible: exhausted candidates");
  }
}

FieldCtx::FieldCtx(std::uint32_t p, unsigned e, unsigned n, std::optional<std::vector<std::uint32_t>> modulus)
    : p_(p), e_(e), n_(n), deg_(e * n), polys_(p), factors_(std::make_shared<FactorSlot>()) {
  if (p < 2 || !arith::is_prime_u64(p)) throw std::invalid_argument("make_field: p = " + std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw std::invalid_argument("make_field: p must be below 2^31");
  if (e == 0 || n == 0) throw std::invalid_argument("make_field: e and n must be positive");
  const BigInt qb = big_pow(std::uint64_t{p}, e);
  if (!fits_u64(qb)) throw std::invalid_argument("make_field: q does not fit in 64 bits");
  q_ = big_to_u64(qb);
  size_ = big_pow(std::uint64_t{p}, deg_);
  group_order_ = size_ - 1;

  if (modulus) {
    auto f = polys_.trim(*modulus);
    if (f.size() != deg_ + 1) throw std::invalid_argument("make_field: modulus must have degree e*n");
    for (auto c : f)
      if (c >= p) throw std::invalid_argument("make_field: modulus coefficient out of range");
    if (f.back() != 1) throw std::invalid_argument("make_field: modulus must be monic");
    if (!polys_.is_irreducible(f)) throw std::invalid_argument("make_field: modulus is reducible");
    modulus_ = std::move(f);
  } else {
    modulus_ = least_irreducible(p, deg_);
  }

  // Tr(x^j) are the power sums of the roots of f (Newton's identities).
  trace_basis_.assign(deg_, 0);
  trace_basis_[0] = static_cast<std::uint32_t>(deg_ % p_);
  for (unsigned k = 1; k < deg_; ++k) {
    // s_k = -(k c_{N-k} + sum_{i=1}^{k-1} c_{N-i} s_{k-i})
    std::uint64_t acc = static_cast<std::uint64_t>(k % p_) * modulus_[deg_ - k] % p_;
    for (unsigned i = 1; i < k; ++i) acc = (acc + static_cast<std::uint64_t>(modulus_[deg_ - i]) * trace_basis_[k - i]) % p_;
    trace_basis_[k] = static_cast<std::uint32_t>((p_ - acc) % p_);
  }

  auto build_map = [&](const FFElem& image_of_x, unsigned l) {
    LinearMap m;
    m.l = l;
    m.cols.assign(static_cast<std::size_t>(deg_) * deg_, 0);
    FFElem cur = one();
    for (unsigned j = 0; j < deg_; ++j) {
      std::copy(cur.coords.begin(), cur.coords.end(), m.cols.begin() + static_cast<std::ptrdiff_t>(j) * deg_);
      cur = mul(cur, image_of_x);
    }
    return m;
  };
  frob_p_ = build_map(pow(gen(), std::uint64_t{p_}), 0);
  for (std::uint64_t l : arith::divisors(n_)) {
    FFElem img = gen();
    for (std::uint64_t i = 0; i < e_ * l; ++i) img = apply(frob_p_, img);
    frob_l_.push_back(build_map(img, static_cast<unsigned>(l)));
  }
}

FieldCtx make_field(std::uint32_t p, unsigned e, unsigned n, std::optional<std::vector<std::uint32_t>> modulus) {
  return FieldCtx(p, e, n, std::move(modulus));
}

const arith::IntFactorization& FieldCtx::group_order_factors(const arith::FactorBudget& budget) const {
  std::lock_guard lock(factors_->mu);
  if (!factors_->f) {
    auto f = arith::factor_qn_minus_1(q_, n_, budget);
    if (!f.complete) {
      throw std::runtime_error("incomplete factorization of " + std::to_string(q_) + "^" + std::to_string(n_) +
                               " - 1 (cofactor " + f.cofactor.get_str() + ")");
    }
    factors_->f = std::move(f);
  }
  return *factors_->f;
}

void FieldCtx::set_group_order_factors(arith::IntFactorization f) const {
  if (f.value != group_order_ || !f.complete || !arith::validate(f))
    throw std::invalid_argument("set_group_order_factors: not a complete factorization of q^n - 1");
  std::lock_guard lock(factors_->mu);
  if (!factors_->f) factors_->f = std::move(f);
}

void FieldCtx::check(const FFElem& x) const {
  if (x.coords.size() != deg_) throw std::invalid_argument("FFElem does not belong to this field");
}

FFElem FieldCtx::zero() const { return FFElem{std::vector<std::uint32_t>(deg_, 0)}; }

FFElem FieldCtx::one() const { return from_fp(1); }

FFElem FieldCtx::from_fp(std::uint32_t c) const {
  FFElem r = zero();
  r.coords[0] = c % p_;
  return r;
}

FFElem FieldCtx::gen() const {
  if (deg_ == 1) return from_fp((p_ - modulus_[0]) % p_);
  FFElem r = zero();
  r.coords[1] = 1;
  return r;
}

FFElem FieldCtx::from_coords(std::vector<std::uint32_t> coords) const {
  if (coords.size() != deg_) throw std::invalid_argument("from_coords: wrong length");
  for (auto c : coords)
    if (c >= p_) throw std::invalid_argument("from_coords: coordinate out of range");
  return FFElem{std::move(coords)};
}

FFElem FieldCtx::from_index(std::uint64_t idx) const {
  FFElem r = zero();
  for (unsigned i = 0; i < deg_; ++i) {
    r.coords[i] = static_cast<std::uint32_t>(idx % p_);
    idx /= p_;
  }
  if (idx != 0) throw std::out_of_range("from_index: index exceeds field size");
  return r;
}

std::uint64_t FieldCtx::to_index(const FFElem& x) const {
  check(x);
  if (!fits_u64(size_)) throw std::out_of_range("to_index: field too large");
  std::uint64_t idx = 0;
  for (unsigned i = deg_; i-- > 0;) idx = idx * p_ + x.coords[i];
  return idx;
}

FFElem FieldCtx::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint32_t> dist(0, p_ - 1);
  FFElem r = zero();
  for (auto& c : r.coords) c = dist(rng);
  return r;
}

bool FieldCtx::is_zero(const FFElem& x) const {
  check(x);
  for (auto c : x.coords)
    if (c) return false;
  return true;
}

FFElem FieldCtx::add(const FFElem& a, const FFElem& b) const {
  check(a);
  check(b);
  FFElem r = a;
  for (unsigned i = 0; i < deg_; ++i) {
    const std::uint32_t s = r.coords[i] + b.coords[i];
    r.coords[i] = s >= p_ ? s - p_ : s;
  }
  return r;
}

FFElem FieldCtx::sub(const FFElem& a, const FFElem& b) const {
  check(a);
  check(b);
  FFElem r = a;
  for (unsigned i = 0; i < deg_; ++i) r.coords[i] = a.coords[i] >= b.coords[i] ? a.coords[i] - b.coords[i] : a.coords[i] + (p_ - b.coords[i]);
  return r;
}

FFElem FieldCtx::neg(const FFElem& a) const { return sub(zero(), a); }

FFElem FieldCtx::scale(const FFElem& a, std::uint32_t c) const {
  check(a);
  FFElem r = a;
  for (auto& v : r.coords) v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * (c % p_) % p_);
  return r;
}

FFElem FieldCtx::mul(const FFElem& a, const FFElem& b) const {
  check(a);
  check(b);
  if (deg_ == 1) return FFElem{{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.coords[0]) * b.coords[0] % p_)}};
  std::vector<std::uint64_t> t(2 * deg_ - 1, 0);
  for (unsigned i = 0; i < deg_; ++i) {
    const std::uint64_t ai = a.coords[i];
    if (!ai) continue;
    for (unsigned j = 0; j < deg_; ++j) t[i + j] = (t[i + j] + ai * b.coords[j]) % p_;
  }
  for (unsigned i = 2 * deg_ - 1; i-- > deg_;) {
    const std::uint64_t c = t[i];
    if (!c) continue;
    const std::uint64_t nc = p_ - c;
    for (unsigned j = 0; j < deg_; ++j) t[i - deg_ + j] = (t[i - deg_ + j] + nc * modulus_[j]) % p_;
  }
  FFElem r;
  r.coords.resize(deg_);
  for (unsigned i = 0; i < deg_; ++i) r.coords[i] = static_cast<std::uint32_t>(t[i]);
  return r;
}

FFElem FieldCtx::inv(const FFElem& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  auto c = polys_.invmod(polys_.trim(a.coords), modulus_);
  c.resize(deg_, 0);
  return FFElem{std::move(c)};
}

FFElem FieldCtx::pow(const FFElem& a, const BigInt& exponent) const {
  if (exponent < 0) return pow(inv(a), BigInt(-exponent));
  FFElem r = one();
  for (std::size_t bit = mpz_sizeinbase(exponent.get_mpz_t(), 2); bit-- > 0;) {
    r = sqr(r);
    if (mpz_tstbit(exponent.get_mpz_t(), bit)) r = mul(r, a);
  }
  return r;
}

FFElem FieldCtx::pow(const FFElem& a, std::uint64_t exponent) const {
  FFElem r = one();
  for (int bit = std::bit_width(exponent) - 1; bit >= 0; --bit) {
    r = sqr(r);
    if ((exponent >> bit) & 1) r = mul(r, a);
  }
  return r;
}

FFElem FieldCtx::apply(const LinearMap& m, const FFElem& x) const {
  check(x);
  std::vector<std::uint64_t> acc(deg_, 0);
  for (unsigned j = 0; j < deg_; ++j) {
    const std::uint64_t xj = x.coords[j];
    if (!xj) continue;
    const std::uint32_t* col = m.cols.data() + static_cast<std::size_t>(j) * deg_;
    for (unsigned i = 0; i < deg_; ++i) acc[i] = (acc[i] + xj * col[i]) % p_;
  }
  FFElem r;
  r.coords.resize(deg_);
  for (unsigned i = 0; i < deg_; ++i) r.coords[i] = static_cast<std::uint32_t>(acc[i]);
  return r;
}

const FieldCtx::LinearMap& FieldCtx::frob_map(unsigned l) const {
  for (const auto& m : frob_l_)
    if (m.l == l) return m;
  throw std::invalid_argument("frobenius: l = " + std::to_string(l) + " does not divide n = " + std::to_string(n_));
}

FFElem FieldCtx::frob_p(const FFElem& x) const { return apply(frob_p_, x); }

FFElem FieldCtx::frobenius(const FFElem& x, unsigned l) const { return apply(frob_map(l), x); }

FFElem FieldCtx::frobenius_iter(const FFElem& x, unsigned l, std::uint64_t k) const {
  const auto& m = frob_map(l);
  k %= n_ / l;
  FFElem r = x;
  for (std::uint64_t i = 0; i < k; ++i) r = apply(m, r);
  return r;
}

std::uint32_t FieldCtx::trace_fp(const FFElem& x) const {
  check(x);
  std::uint64_t acc = 0;
  for (unsigned j = 0; j < deg_; ++j) acc = (acc + static_cast<std::uint64_t>(x.coords[j]) * trace_basis_[j]) % p_;
  return static_cast<std::uint32_t>(acc);
}

bool FieldCtx::is_primitive(const FFElem& x) const {
  if (is_zero(x)) return false;
  const auto& f = group_order_factors();
  for (const auto& pf : f.factors) {
    BigInt ex;
    mpz_divexact(ex.get_mpz_t(), group_order_.get_mpz_t(), pf.prime.get_mpz_t());
    if (is_one(pow(x, ex))) return false;
  }
  return true;
}

std::uint64_t FieldCtx::discrete_log(const FFElem& g, const FFElem& y) const {
  if (is_zero(y)) throw std::domain_error("discrete_log: y = 0");
  if (size_ > (BigInt(1) << 24)) throw std::out_of_range("discrete_log: field larger than 2^24");
  const std::uint64_t order = big_to_u64(group_order_);
  const auto m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(order))));
  std::unordered_map<std::uint64_t, std::uint64_t> baby;
  baby.reserve(m);
  FFElem cur = one();
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(to_index(cur), j);
    cur = mul(cur, g);
  }
  const FFElem giant = inv(pow(g, m));
  FFElem gamma = y;
  for (std::uint64_t i = 0; i <= m; ++i) {
    if (auto it = baby.find(to_index(gamma)); it != baby.end()) return (i * m + it->second) % order;
    gamma = mul(gamma, giant);
  }
  throw std::domain_error("discrete_log: no solution (is g primitive?)");
}

}  // namespace pcnlab::ffield
