#include "pcnlab/ffield/small_field.hpp"

#include <stdexcept>
#include <string>

#include "pcnlab/arith/numtheory.hpp"

namespace pcnlab::ffield {

SmallField::SmallField(const FieldCtx& ctx, std::uint64_t cap) : ctx_(ctx) {
  if (ctx.size() > BigInt(static_cast<unsigned long>(cap)) || ctx.size() > BigInt(1UL << 31))
    throw std::out_of_range("SmallField: field size " + ctx.size().get_str() + " exceeds cap");
  size_ = static_cast<std::uint32_t>(big_to_u64(ctx.size()));
  order_ = size_ - 1;
  for (auto [r, unused] : arith::factor_u64(order_)) order_primes_.push_back(static_cast<std::uint32_t>(r));

  // First primitive element in index order; the order test runs on u64 exponents.
  auto primitive = [&](const FFElem& x) {
    if (ctx_.is_zero(x)) return false;
    for (auto r : order_primes_)
      if (ctx_.is_one(ctx_.pow(x, std::uint64_t{order_ / r}))) return false;
    return true;
  };
  generator_ = ctx_.gen();
  if (!primitive(generator_)) {
    for (std::uint32_t idx = 1;; ++idx) {
      generator_ = ctx_.from_index(idx);
      if (primitive(generator_)) break;
    }
  }

  index_of_log_.resize(order_);
  log_of_index_.assign(size_, order_);
  FFElem cur = ctx_.one();
  for (std::uint32_t k = 0; k < order_; ++k) {
    const auto idx = static_cast<std::uint32_t>(ctx_.to_index(cur));
    index_of_log_[k] = idx;
    log_of_index_[idx] = k;
    cur = ctx_.mul(cur, generator_);
  }

  // 1 + g^k: bump the constant coordinate, i.e. the lowest base-p digit.
  const std::uint32_t p = ctx_.p();
  zech_.resize(order_);
  for (std::uint32_t k = 0; k < order_; ++k) {
    const std::uint32_t idx = index_of_log_[k];
    const std::uint32_t digit = idx % p;
    const std::uint32_t bumped = digit + 1 == p ? idx - digit : idx + 1;
    zech_[k] = log_of_index_[bumped];
  }

  for (std::uint64_t l : arith::divisors(ctx_.n())) {
    std::uint64_t v = order_ == 1 ? 0 : arith::powmod_u64(ctx_.q() % order_, l, order_);
    q_pow_.emplace_back(static_cast<unsigned>(l), static_cast<std::uint32_t>(v));
  }
}

SmallField::Elem SmallField::add(Elem a, Elem b) const {
  if (a == order_) return b;
  if (b == order_) return a;
  // g^a + g^b = g^a (1 + g^(b-a))
  const std::uint32_t d = b >= a ? b - a : b + (order_ - a);
  const std::uint32_t z = zech_[d];
  if (z == order_) return order_;
  const std::uint64_t s = static_cast<std::uint64_t>(a) + z;
  return static_cast<Elem>(s >= order_ ? s - order_ : s);
}

SmallField::Elem SmallField::neg(Elem a) const {
  if (a == order_ || ctx_.p() == 2) return a;
  const std::uint64_t s = static_cast<std::uint64_t>(a) + order_ / 2;
  return static_cast<Elem>(s >= order_ ? s - order_ : s);
}

SmallField::Elem SmallField::mul(Elem a, Elem b) const {
  if (a == order_ || b == order_) return order_;
  const std::uint64_t s = static_cast<std::uint64_t>(a) + b;
  return static_cast<Elem>(s >= order_ ? s - order_ : s);
}

SmallField::Elem SmallField::inv(Elem a) const {
  if (a == order_) throw std::domain_error("SmallField: inverse of zero");
  return a == 0 ? 0 : order_ - a;
}

SmallField::Elem SmallField::pow(Elem a, std::uint64_t k) const {
  if (a == order_) return k == 0 ? 0 : order_;
  return static_cast<Elem>(static_cast<unsigned __int128>(a) * k % order_);
}

SmallField::Elem SmallField::frobenius(Elem a, unsigned l) const {
  if (a == order_) return a;
  for (auto [ll, qp] : q_pow_)
    if (ll == l) return static_cast<Elem>(static_cast<std::uint64_t>(a) * qp % order_);
  throw std::invalid_argument("frobenius: l = " + std::to_string(l) + " does not divide n");
}

bool SmallField::is_primitive(Elem a) const {
  if (a == order_) return false;
  for (auto r : order_primes_)
    if (static_cast<std::uint64_t>(a) * (order_ / r) % order_ == 0) return false;
  return true;
}

std::vector<std::uint32_t> SmallField::trace_by_log() const {
  std::vector<std::uint32_t> out(order_);
  for (std::uint32_t k = 0; k < order_; ++k) out[k] = ctx_.trace_fp(ctx_.from_index(index_of_log_[k]));
  return out;
}

}  // namespace pcnlab::ffield
