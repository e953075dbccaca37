#pragma once

#include <cstdint>
#include <vector>

#include "pcnlab/ffield/field.hpp"

namespace pcnlab::ffield {

/// Log-table view of a small FieldCtx. Nonzero elements are stored as their
/// discrete log k in [0, q^n - 2] with respect to a fixed primitive element g;
/// zero is the sentinel q^n - 1. Addition goes through a Zech table.
class SmallField {
 public:
  using Elem = std::uint32_t;
  static constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 22;

  explicit SmallField(const FieldCtx& ctx, std::uint64_t cap = kDefaultCap);

  const FieldCtx& ctx() const { return ctx_; }
  std::uint32_t p() const { return ctx_.p(); }
  unsigned n() const { return ctx_.n(); }
  std::uint64_t q() const { return ctx_.q(); }
  std::uint32_t size() const { return size_; }
  std::uint32_t order() const { return order_; }  // size - 1
  const FFElem& generator() const { return generator_; }

  Elem zero() const { return order_; }
  Elem one() const { return 0; }
  bool is_zero(Elem a) const { return a == order_; }
  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t k) const;
  /// a^(q^l) for l | n.
  Elem frobenius(Elem a, unsigned l) const;

  /// Order test against the prime divisors of q^n - 1.
  bool is_primitive(Elem a) const;

  /// Element with the given coordinate index (see FieldCtx::from_index).
  Elem from_index(std::uint32_t idx) const { return log_of_index_[idx]; }
  std::uint32_t to_index(Elem a) const { return a == order_ ? 0 : index_of_log_[a]; }
  Elem from_elem(const FFElem& x) const { return from_index(static_cast<std::uint32_t>(ctx_.to_index(x))); }
  FFElem to_elem(Elem a) const { return ctx_.from_index(to_index(a)); }

  /// Absolute trace to F_p of every nonzero element, indexed by log.
  std::vector<std::uint32_t> trace_by_log() const;

 private:
  FieldCtx ctx_;
  std::uint32_t size_ = 0, order_ = 0;
  FFElem generator_;
  std::vector<std::uint32_t> index_of_log_;  // log -> coordinate index
  std::vector<std::uint32_t> log_of_index_;  // coordinate index -> log (0 -> sentinel)
  std::vector<std::uint32_t> zech_;          // log(1 + g^k)
  std::vector<std::uint32_t> order_primes_;
  std::vector<std::pair<unsigned, std::uint32_t>> q_pow_;  // (l, q^l mod order)
};

}  // namespace pcnlab::ffield
