#include "oracles.hpp"

#include <stdexcept>

#include "pcnlab/arith/numtheory.hpp"

namespace oracle {

using pcnlab::ffield::FFElem;
using pcnlab::ffield::FieldCtx;

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_trial(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

pcnlab::BigInt sigma_naive(std::uint64_t n) {
  pcnlab::BigInt s = 0;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) s += static_cast<unsigned long>(d);
  return s;
}

std::uint64_t phi_naive(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    std::uint64_t a = k, b = n;
    while (b) {
      const std::uint64_t t = a % b;
      a = b;
      b = t;
    }
    if (a == 1) ++c;
  }
  return c;
}

std::size_t divisor_count_naive(std::uint64_t n) {
  std::size_t c = 0;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) ++c;
  return c;
}

std::uint64_t mult_order_naive(std::uint64_t q, std::uint64_t m) {
  if (m == 1) return 1;
  std::uint64_t x = q % m, k = 1;
  while (x != 1) {
    x = x * (q % m) % m;
    ++k;
    if (k > m) throw std::invalid_argument("mult_order_naive: not a unit");
  }
  return k;
}

namespace {

// Row reduction over F_p; returns the rank and leaves a basis of the row space.
unsigned rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p, unsigned cols) {
  unsigned rank = 0;
  for (unsigned c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const std::uint64_t inv = pcnlab::arith::powmod_u64(rows[rank][c], p - 2, p);
    for (auto& v : rows[rank]) v = v * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::uint64_t f = rows[r][c];
      for (unsigned k = 0; k < cols; ++k) rows[r][k] = (rows[r][k] + (p - f) * rows[rank][k]) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<FFElem> subfield_basis(const FieldCtx& f, unsigned l) {
  // Kernel of sigma_l - id acting on coordinate vectors.
  const unsigned N = f.degree();
  const std::uint64_t p = f.p();
  std::vector<std::vector<std::uint64_t>> m(N, std::vector<std::uint64_t>(N, 0));  // m[i][j]: row i, column j
  for (unsigned j = 0; j < N; ++j) {
    FFElem basis = f.zero();
    basis.coords[j] = 1;
    FFElem img = f.sub(f.frobenius(basis, l), basis);
    for (unsigned i = 0; i < N; ++i) m[i][j] = img.coords[i];
  }
  // reduced row echelon form
  std::vector<int> pivot_col;
  unsigned rank = 0;
  for (unsigned c = 0; c < N && rank < N; ++c) {
    unsigned piv = rank;
    while (piv < N && m[piv][c] == 0) ++piv;
    if (piv == N) continue;
    std::swap(m[rank], m[piv]);
    const std::uint64_t inv = pcnlab::arith::powmod_u64(m[rank][c], p - 2, p);
    for (auto& v : m[rank]) v = v * inv % p;
    for (unsigned r = 0; r < N; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const std::uint64_t fct = m[r][c];
      for (unsigned k = 0; k < N; ++k) m[r][k] = (m[r][k] + (p - fct) * m[rank][k]) % p;
    }
    pivot_col.push_back(static_cast<int>(c));
    ++rank;
  }
  std::vector<bool> is_pivot(N, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<FFElem> out;
  for (unsigned free = 0; free < N; ++free) {
    if (is_pivot[free]) continue;
    FFElem v = f.zero();
    v.coords[free] = 1;
    for (unsigned r = 0; r < rank; ++r) v.coords[pivot_col[r]] = static_cast<std::uint32_t>((p - m[r][free]) % p);
    out.push_back(v);
  }
  return out;
}

unsigned normal_rank(const FieldCtx& f, const FFElem& x, unsigned l) {
  const unsigned N = f.degree();
  const auto basis = subfield_basis(f, l);
  std::vector<std::vector<std::uint64_t>> rows;
  FFElem cur = x;
  for (unsigned i = 0; i < f.n() / l; ++i) {
    for (const auto& b : basis) {
      FFElem v = f.mul(b, cur);
      rows.emplace_back(v.coords.begin(), v.coords.end());
    }
    cur = f.frobenius(cur, l);
  }
  return rank_mod_p(std::move(rows), f.p(), N);
}

bool is_normal_by_rank(const FieldCtx& f, const FFElem& x, unsigned l) { return normal_rank(f, x, l) == f.degree(); }

std::uint64_t element_order_naive(const FieldCtx& f, const FFElem& x) {
  if (f.is_zero(x)) throw std::invalid_argument("element_order_naive: zero");
  FFElem cur = x;
  std::uint64_t k = 1;
  while (!f.is_one(cur)) {
    cur = f.mul(cur, x);
    ++k;
  }
  return k;
}

}  // namespace oracle
