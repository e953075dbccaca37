#include "pcnlab/chars/chars.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pcnlab/arith/numtheory.hpp"
#include "pcnlab/fqxpoly/cosets.hpp"
#include "pcnlab/fqxpoly/normality.hpp"

namespace pcnlab::chars {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

// One complex DFT of fixed length, reused on its own buffers.
class Dft {
 public:
  Dft(std::size_t len, int sign) : len_(len) {
    in_ = fftw_alloc_complex(len);
    out_ = fftw_alloc_complex(len);
    plan_ = fftw_plan_dft_1d(static_cast<int>(len), in_, out_, sign, FFTW_ESTIMATE);
  }
  ~Dft() {
    fftw_destroy_plan(plan_);
    fftw_free(in_);
    fftw_free(out_);
  }
  Dft(const Dft&) = delete;
  Dft& operator=(const Dft&) = delete;

  Complex* in() { return reinterpret_cast<Complex*>(in_); }
  const Complex* out() const { return reinterpret_cast<const Complex*>(out_); }
  void run() { fftw_execute(plan_); }
  std::size_t size() const { return len_; }

 private:
  std::size_t len_;
  fftw_complex *in_, *out_;
  fftw_plan plan_;
};

class PolyRing {
 public:
  explicit PolyRing(const ffield::SmallField& f) : f_(f) {}

  Poly mul(const Poly& a, const Poly& b) const {
    Poly r(a.size() + b.size() - 1, f_.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f_.add(r[i + j], f_.mul(a[i], b[j]));
    return r;
  }

  // quotient when monic d divides a exactly
  std::optional<Poly> divide(Poly a, const Poly& d) const {
    const std::size_t dd = d.size() - 1;
    if (a.size() < d.size()) return std::nullopt;
    Poly quo(a.size() - dd, f_.zero());
    for (std::size_t i = a.size(); i-- > dd;) {
      const Elem c = a[i];
      quo[i - dd] = c;
      if (f_.is_zero(c)) continue;
      for (std::size_t j = 0; j <= dd; ++j) a[i - dd + j] = f_.sub(a[i - dd + j], f_.mul(c, d[j]));
    }
    for (std::size_t j = 0; j < dd; ++j)
      if (!f_.is_zero(a[j])) return std::nullopt;
    return quo;
  }

 private:
  const ffield::SmallField& f_;
};

DivisorLattice build_lattice(const ffield::SmallField& f, unsigned l) {
  DivisorLattice L;
  const unsigned n = f.n();
  L.l = l;
  L.k = n / l;
  L.Q = 1;
  for (unsigned i = 0; i < l; ++i) L.Q *= f.q();
  L.multiplicity = 1;
  L.m_prime = L.k;
  while (L.m_prime % f.p() == 0) {
    L.m_prime /= f.p();
    L.multiplicity *= f.p();
  }

  // F_Q inside F_{q^n}: zero and the powers of g^((N-1)/(Q-1))
  std::vector<Elem> sub{f.zero()};
  const std::uint32_t step = static_cast<std::uint32_t>(f.order() / (L.Q - 1));
  for (std::uint32_t t = 0; t < f.order(); t += step) sub.push_back(t);

  PolyRing ring(f);
  Poly rest(L.m_prime + 1, f.zero());
  rest[0] = f.neg(f.one());
  rest[L.m_prime] = f.one();
  // smallest-degree monic divisors of what is left are irreducible
  for (unsigned d = 1; rest.size() > 1; ++d) {
    std::vector<std::size_t> digit(d, 0);
    for (;;) {
      Poly cand(d + 1, f.one());
      for (unsigned i = 0; i < d; ++i) cand[i] = sub[digit[i]];
      if (!f.is_zero(cand[0])) {
        while (rest.size() > d) {
          auto quo = ring.divide(rest, cand);
          if (!quo) break;
          rest = std::move(*quo);
          L.factors.push_back(cand);
        }
      }
      unsigned i = 0;
      while (i < d && ++digit[i] == sub.size()) digit[i++] = 0;
      if (i == d || rest.size() <= d) break;
    }
  }

  const std::size_t r = L.factors.size();
  std::vector<unsigned> ex(r, 0);
  for (;;) {
    L.divisors.push_back(ex);
    std::size_t i = 0;
    while (i < r && ++ex[i] > L.multiplicity) ex[i++] = 0;
    if (i == r) break;
  }
  std::stable_sort(L.divisors.begin(), L.divisors.end(),
                   [&](const auto& a, const auto& b) { return L.degree(a) < L.degree(b); });
  for (const auto& dv : L.divisors) {
    Poly g{f.one()};
    for (std::size_t c = 0; c < r; ++c)
      for (unsigned t = 0; t < dv[c]; ++t) g = ring.mul(g, L.factors[c]);
    L.divisor_polys.push_back(std::move(g));
  }
  return L;
}

double theta_of_radical(std::uint64_t m) {
  double t = 1;
  for (auto [r, e] : arith::factor_u64(m)) t *= 1.0 - 1.0 / static_cast<double>(r);
  return t;
}

SelfTestReport blank(const CharSystem& sys) {
  SelfTestReport r;
  const auto& f = sys.field();
  r.p = f.p();
  r.e = f.ctx().e();
  r.n = f.n();
  r.size = f.size();
  return r;
}

}  // namespace

unsigned DivisorLattice::degree(const std::vector<unsigned>& ex) const {
  unsigned d = 0;
  for (std::size_t c = 0; c < factors.size(); ++c) d += ex[c] * static_cast<unsigned>(factors[c].size() - 1);
  return d;
}

int DivisorLattice::mobius(const std::vector<unsigned>& ex) const {
  int s = 1;
  for (unsigned v : ex) {
    if (v > 1) return 0;
    if (v == 1) s = -s;
  }
  return s;
}

double DivisorLattice::euler_phi(const std::vector<unsigned>& ex) const {
  double phi = 1;
  for (std::size_t c = 0; c < factors.size(); ++c) {
    if (ex[c] == 0) continue;
    const double norm = std::pow(static_cast<double>(Q), static_cast<double>(factors[c].size() - 1));
    phi *= std::pow(norm, ex[c] - 1.0) * (norm - 1);
  }
  return phi;
}

CharSystem::CharSystem(std::uint32_t p, unsigned e, unsigned n)
    : f_([&] {
        if (p < 2 || e == 0 || n == 0) throw std::invalid_argument("bad field parameters");
        if (big_pow(p, std::uint64_t{e} * n) > kMaxSize)
          throw std::length_error("character tables limited to fields of size <= " + std::to_string(kMaxSize));
        return ffield::SmallField(ffield::make_field(p, e, n), kMaxSize);
      }()),
      trace_(f_.trace_by_log()) {
  for (auto l : arith::divisors(n)) lattices_.push_back(build_lattice(f_, static_cast<unsigned>(l)));
}

Complex CharSystem::chi(std::uint32_t j, Elem x) const {
  if (f_.is_zero(x)) return j % group_order() == 0 ? 1.0 : 0.0;
  const std::uint64_t t = (std::uint64_t{j} * x) % group_order();
  return std::polar(1.0, kTwoPi * static_cast<double>(t) / group_order());
}

Complex CharSystem::psi(Elem a, Elem x) const {
  if (f_.is_zero(a) || f_.is_zero(x)) return 1.0;
  return std::polar(1.0, kTwoPi * trace(f_.mul(a, x)) / f_.p());
}

std::uint64_t CharSystem::chi_order(std::uint32_t j) const {
  return group_order() / arith::gcd_u64(j, group_order());
}

const DivisorLattice& CharSystem::lattice(unsigned l) const {
  for (const auto& L : lattices_)
    if (L.l == l) return L;
  throw std::invalid_argument("l = " + std::to_string(l) + " does not divide n");
}

Elem CharSystem::apply(const Poly& G, Elem x, unsigned l) const {
  Elem acc = f_.zero(), y = x;
  for (std::size_t i = 0; i < G.size(); ++i) {
    acc = f_.add(acc, f_.mul(G[i], y));
    y = f_.frobenius(y, l);
  }
  return acc;
}

AdditiveCharOrder CharSystem::additive_order(Elem a, unsigned l) const {
  const auto& L = lattice(l);
  // conj[i] = a^{q^{-l i}}
  std::vector<Elem> conj{a};
  for (unsigned i = 1; i < L.k; ++i) {
    Elem y = conj.back();
    for (unsigned t = 1; t < L.k; ++t) y = f_.frobenius(y, l);
    conj.push_back(y);
  }
  for (std::size_t d = 0; d < L.divisors.size(); ++d) {
    const Poly& G = L.divisor_polys[d];
    Elem s = f_.zero();
    for (std::size_t i = 0; i < G.size(); ++i) s = f_.add(s, f_.mul(G[i], conj[i % L.k]));
    if (f_.is_zero(s)) return {a, l, L.divisors[d], G};
  }
  throw std::logic_error("X^(n/l) - 1 does not annihilate psi_a");
}

std::vector<double> CharSystem::omega_all() const {
  const std::uint32_t Q = group_order();
  std::vector<std::uint64_t> mu(Q + 1), phi(Q + 1);
  for (auto d : arith::divisors(Q)) {
    mu[d] = static_cast<std::uint64_t>(arith::mobius(d) + 1);  // shifted to stay unsigned
    phi[d] = arith::euler_phi(d);
  }
  Dft dft(Q, FFTW_BACKWARD);
  for (std::uint32_t j = 0; j < Q; ++j) {
    const auto d = chi_order(j);
    dft.in()[j] = (static_cast<double>(mu[d]) - 1) / static_cast<double>(phi[d]);
  }
  dft.run();
  const double theta = theta_of_radical(Q);
  std::vector<double> out(size());
  for (std::uint32_t k = 0; k < Q; ++k) out[k] = theta * dft.out()[k].real();
  out[Q] = theta;  // only chi_0 survives at zero
  return out;
}

std::vector<double> CharSystem::Omega_all(unsigned l) const {
  const auto& L = lattice(l);
  const std::uint32_t Q = group_order();
  std::vector<double> weight(L.divisors.size());
  for (std::size_t d = 0; d < weight.size(); ++d) weight[d] = L.mobius(L.divisors[d]) / L.euler_phi(L.divisors[d]);
  auto index_of = [&](const std::vector<unsigned>& ex) {
    return static_cast<std::size_t>(std::find(L.divisors.begin(), L.divisors.end(), ex) - L.divisors.begin());
  };

  // sum_a w(a) psi_1(a x): a = g^t, x = g^s gives a cyclic correlation over the logs
  Dft fu(Q, FFTW_FORWARD), fv(Q, FFTW_FORWARD), back(Q, FFTW_BACKWARD);
  double total_nonzero = 0;
  for (std::uint32_t t = 0; t < Q; ++t) {
    const double w = weight[index_of(additive_order(t, l).exponents)];
    fu.in()[t] = w;
    fv.in()[t] = std::polar(1.0, kTwoPi * trace_[t] / f_.p());
    total_nonzero += w;
  }
  fu.run();
  fv.run();
  for (std::uint32_t j = 0; j < Q; ++j) back.in()[j] = std::conj(fu.out()[j]) * fv.out()[j];
  back.run();

  const double w0 = weight[index_of(additive_order(f_.zero(), l).exponents)];
  const double theta = L.euler_phi(L.full()) / std::pow(static_cast<double>(L.Q), L.k);
  std::vector<double> out(size());
  for (std::uint32_t s = 0; s < Q; ++s) out[s] = theta * (w0 + back.out()[s].real() / Q);
  out[Q] = theta * (w0 + total_nonzero);
  return out;
}

bool SelfTestReport::passed() const {
  bool ok = orth_mult <= orth_tol_mult && orth_mult_dual <= orth_tol_mult && orth_add <= orth_tol_add;
  ok = ok && gauss_rel <= 1e-6;
  ok = ok && omega_dev <= 1e-9 && std::abs(omega_zero - theta) <= 1e-9;
  ok = ok && Omega_dev <= 1e-9 && std::abs(Omega_zero) <= 1e-9 && Omega_sum_rel <= 1e-6;
  ok = ok && order_count_mismatches == 0 && lattice_shape_ok;
  ok = ok && cn_identity_dev <= 1e-6 && cn_constrained_dev <= 1e-6;
  return ok;
}

SelfTestReport orthogonality_check(const CharSystem& sys) {
  SelfTestReport r = blank(sys);
  const std::uint32_t Q = sys.group_order(), N = sys.size();
  r.orth_tol_mult = 1e-9 * Q;
  r.orth_tol_add = 1e-9 * N;

  // sum over x of chi_j(x), every j at once
  Dft over_x(Q, FFTW_BACKWARD);
  std::fill(over_x.in(), over_x.in() + Q, Complex(1.0));
  over_x.run();
  for (std::uint32_t j = 1; j < Q; ++j) r.orth_mult = std::max(r.orth_mult, std::abs(over_x.out()[j]));
  r.orth_mult = std::max(r.orth_mult, std::abs(over_x.out()[0] - static_cast<double>(Q)));

  // sum over chi of chi(g^k), for each k: row k of the character table summed over j
  Dft over_chi(Q, FFTW_FORWARD);
  for (std::uint32_t j = 0; j < Q; ++j) over_chi.in()[j] = 1.0;
  over_chi.run();
  for (std::uint32_t k = 1; k < Q; ++k) r.orth_mult_dual = std::max(r.orth_mult_dual, std::abs(over_chi.out()[k]));

  // additive: count Tr(ax) over x for every a != 0
  const auto& f = sys.field();
  std::vector<Complex> root(f.p());
  for (std::uint32_t t = 0; t < f.p(); ++t) root[t] = std::polar(1.0, kTwoPi * t / f.p());
  std::vector<std::uint32_t> cnt(f.p());
  for (Elem a = 0; a < Q; ++a) {
    std::fill(cnt.begin(), cnt.end(), 0);
    cnt[0] = 1;  // x = 0
    for (Elem x = 0; x < Q; ++x) ++cnt[sys.trace(f.mul(a, x))];
    Complex s = 0;
    for (std::uint32_t t = 0; t < f.p(); ++t) s += static_cast<double>(cnt[t]) * root[t];
    r.orth_add = std::max(r.orth_add, std::abs(s));
  }
  return r;
}

SelfTestReport gauss_magnitude_check(const CharSystem& sys) {
  SelfTestReport r = blank(sys);
  const std::uint32_t Q = sys.group_order();
  const double target = std::sqrt(static_cast<double>(sys.size()));
  Dft dft(Q, FFTW_BACKWARD);
  // G(chi_j, psi_a) = sum_k e(jk/Q) psi_a(g^k); chi_j(0) = 0 for j != 0
  for (Elem a = 0; a < Q; ++a) {
    for (std::uint32_t k = 0; k < Q; ++k) dft.in()[k] = sys.psi(a, k);
    dft.run();
    for (std::uint32_t j = 1; j < Q; ++j) {
      r.gauss_rel = std::max(r.gauss_rel, std::abs(std::abs(dft.out()[j]) - target) / target);
      ++r.gauss_pairs;
    }
  }
  return r;
}

SelfTestReport characteristic_function_check(const CharSystem& sys) {
  SelfTestReport r = blank(sys);
  const auto& f = sys.field();
  const std::uint32_t Q = sys.group_order();
  r.theta = theta_of_radical(Q);

  const auto omega = sys.omega_all();
  for (Elem x = 0; x < Q; ++x) r.omega_dev = std::max(r.omega_dev, std::abs(omega[x] - (f.is_primitive(x) ? 1.0 : 0.0)));
  r.omega_zero = omega[Q];

  const auto divs = arith::divisors(f.n());
  std::vector<std::vector<double>> Om;
  for (auto l : divs) {
    const auto& L = sys.lattice(static_cast<unsigned>(l));
    Om.push_back(sys.Omega_all(static_cast<unsigned>(l)));
    const auto& v = Om.back();
    double sum = 0;
    for (Elem x = 0; x < Q; ++x) {
      const bool normal = fqxpoly::normality_test(f, x, static_cast<unsigned>(l));
      r.Omega_dev = std::max(r.Omega_dev, std::abs(v[x] - (normal ? 1.0 : 0.0)));
      sum += v[x];
    }
    sum += v[Q];
    r.Omega_zero = std::max(r.Omega_zero, std::abs(v[Q]));
    const double phi = L.euler_phi(L.full());
    r.Omega_sum_rel = std::max(r.Omega_sum_rel, std::abs(sum - phi) / phi);
  }

  if (f.n() >= 2) {
    // CN as a sum of products over the proper divisors, and in its constrained form
    double pointwise = 0;
    for (Elem x = 0; x <= Q; ++x) {
      double prod = 1;
      for (std::size_t i = 0; i + 1 < divs.size(); ++i) prod *= Om[i][x];
      pointwise += prod;
    }
    for (Elem x = 0; x < Q; ++x) r.cn += fqxpoly::is_completely_normal(f, x);
    const double cn = static_cast<double>(r.cn);
    r.cn_identity_dev = std::abs(pointwise - cn) / cn;

    // h = w_{l_1} * ... * w_{l_k} under addition; CN = q^n theta(bq) h(0)
    const std::uint32_t N = sys.size();
    auto idx = [&](Elem x) { return f.to_index(x); };
    std::vector<double> h(N, 0.0);
    h[0] = 1;
    double theta_all = 1;
    for (std::size_t i = 0; i + 1 < divs.size(); ++i) {
      const unsigned l = static_cast<unsigned>(divs[i]);
      const auto& L = sys.lattice(l);
      theta_all *= L.euler_phi(L.full()) / std::pow(static_cast<double>(L.Q), L.k);
      std::vector<double> w(N);
      for (std::uint32_t ix = 0; ix < N; ++ix) {
        const auto ord = sys.additive_order(f.from_index(ix), l);
        w[ix] = L.mobius(ord.exponents) / L.euler_phi(ord.exponents);
      }
      std::vector<double> nh(N, 0.0);
      for (std::uint32_t ia = 0; ia < N; ++ia) {
        if (h[ia] == 0) continue;
        const Elem a = f.from_index(ia);
        for (std::uint32_t ib = 0; ib < N; ++ib)
          if (w[ib] != 0) nh[idx(f.add(a, f.from_index(ib)))] += h[ia] * w[ib];
      }
      h = std::move(nh);
    }
    r.cn_constrained_dev = std::abs(N * theta_all * h[0] - cn) / cn;
  }
  return r;
}

SelfTestReport order_count_check(const CharSystem& sys) {
  SelfTestReport r = blank(sys);
  const auto& f = sys.field();
  for (auto lu : arith::divisors(f.n())) {
    const unsigned l = static_cast<unsigned>(lu);
    const auto& L = sys.lattice(l);
    const auto shape = fqxpoly::cyc_factorization(f.q(), f.n(), l);
    std::vector<std::uint64_t> degs;
    for (const auto& g : L.factors) degs.push_back(g.size() - 1);
    if (shape.m_prime != L.m_prime || shape.multiplicity != L.multiplicity || shape.coset_degrees != degs)
      r.lattice_shape_ok = false;

    std::vector<std::uint64_t> count(L.divisors.size(), 0);
    for (std::uint32_t ix = 0; ix < f.size(); ++ix) {
      const auto ord = sys.additive_order(f.from_index(ix), l);
      ++count[std::find(L.divisors.begin(), L.divisors.end(), ord.exponents) - L.divisors.begin()];
    }
    for (std::size_t d = 0; d < count.size(); ++d) {
      ++r.order_classes;
      if (static_cast<double>(count[d]) != L.euler_phi(L.divisors[d])) ++r.order_count_mismatches;
    }
  }
  return r;
}

SelfTestReport self_test(std::uint32_t p, unsigned e, unsigned n) {
  const CharSystem sys(p, e, n);
  SelfTestReport r = orthogonality_check(sys);
  const auto g = gauss_magnitude_check(sys);
  const auto c = characteristic_function_check(sys);
  const auto o = order_count_check(sys);
  r.gauss_rel = g.gauss_rel;
  r.gauss_pairs = g.gauss_pairs;
  r.theta = c.theta;
  r.omega_dev = c.omega_dev;
  r.omega_zero = c.omega_zero;
  r.Omega_dev = c.Omega_dev;
  r.Omega_zero = c.Omega_zero;
  r.Omega_sum_rel = c.Omega_sum_rel;
  r.cn = c.cn;
  r.cn_identity_dev = c.cn_identity_dev;
  r.cn_constrained_dev = c.cn_constrained_dev;
  r.order_count_mismatches = o.order_count_mismatches;
  r.order_classes = o.order_classes;
  r.lattice_shape_ok = o.lattice_shape_ok;
  return r;
}

}  // namespace pcnlab::chars
