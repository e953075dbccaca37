#include <gtest/gtest.h>

#include "pcnlab/arith/numtheory.hpp"
#include "pcnlab/chars/chars.hpp"

using namespace pcnlab;
using namespace pcnlab::chars;

TEST(Chars, Basics) {
  CharSystem f4(2, 1, 2);
  EXPECT_EQ(f4.group_order(), 3u);  // three multiplicative characters
  const auto& F = f4.field();
  for (Elem x = 0; x <= 3; ++x) EXPECT_EQ(f4.psi(F.zero(), x), Complex(1.0));
  EXPECT_EQ(f4.chi(0, F.zero()), Complex(1.0));
  EXPECT_EQ(f4.chi(1, F.zero()), Complex(0.0));

  CharSystem f13(13, 1, 1);
  for (std::uint32_t j = 0; j < 12; ++j) {
    const auto ord = f13.chi_order(j);
    // chi_j^ord is trivial and no proper divisor of ord works
    for (Elem x = 0; x < 12; ++x) EXPECT_NEAR(std::abs(std::pow(f13.chi(j, x), static_cast<double>(ord)) - 1.0), 0, 1e-12);
    for (auto d : arith::divisors(ord)) {
      if (d == ord) continue;
      EXPECT_GT(std::abs(std::pow(f13.chi(j, 1), static_cast<double>(d)) - 1.0), 1e-6);
    }
  }
  EXPECT_THROW(CharSystem(2, 1, 13), std::length_error);
}

TEST(Chars, F4Example) {
  CharSystem f4(2, 1, 2);
  const auto& F = f4.field();
  EXPECT_EQ(f4.additive_order(F.zero(), 1).order_poly.size(), 1u);
  const auto& L = f4.lattice(1);
  ASSERT_EQ(L.factors.size(), 1u);  // X^2 - 1 = (X - 1)^2
  EXPECT_EQ(L.multiplicity, 2u);
  int deg1 = 0, deg2 = 0;
  for (Elem a = 0; a < 3; ++a) {
    const auto o = f4.additive_order(a, 1);
    (o.order_poly.size() == 2 ? deg1 : deg2)++;
  }
  EXPECT_EQ(deg1, 1);  // phi_1(X - 1)
  EXPECT_EQ(deg2, 2);  // phi_1((X - 1)^2)

  const auto om = f4.Omega_all(1);
  for (Elem x = 0; x < 3; ++x) EXPECT_NEAR(om[x], x == 0 ? 0.0 : 1.0, 1e-12);  // 1 is not normal
  EXPECT_NEAR(om[3], 0.0, 1e-12);
  const auto w = f4.omega_all();
  for (Elem x = 0; x < 3; ++x) EXPECT_NEAR(w[x], x == 0 ? 0.0 : 1.0, 1e-12);
}

TEST(Chars, OrderMatchesDefinition) {
  // literal definition: psi_a(G o x) = 1 for every x
  for (auto [p, e, n] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned>>{
           {2, 1, 4}, {2, 1, 6}, {3, 1, 3}, {2, 2, 3}, {3, 1, 4}, {5, 1, 2}, {2, 1, 9}}) {
    CharSystem sys(p, e, n);
    const auto& F = sys.field();
    for (auto lu : arith::divisors(n)) {
      const unsigned l = static_cast<unsigned>(lu);
      const auto& L = sys.lattice(l);
      for (std::uint32_t ia = 0; ia < F.size(); ++ia) {
        const Elem a = F.from_index(ia);
        const auto ord = sys.additive_order(a, l);
        std::size_t least = L.divisor_polys.size();
        for (std::size_t d = 0; d < L.divisor_polys.size() && least == L.divisor_polys.size(); ++d) {
          bool kills = true;
          for (std::uint32_t ix = 0; ix < F.size() && kills; ++ix)
            kills = sys.trace(F.mul(a, sys.apply(L.divisor_polys[d], F.from_index(ix), l))) == 0;
          if (kills) least = d;
        }
        ASSERT_LT(least, L.divisor_polys.size());
        EXPECT_EQ(ord.order_poly, L.divisor_polys[least]) << p << "^" << e << " n=" << n << " l=" << l;
      }
    }
  }
}

TEST(Chars, SelfTestSmallFields) {
  for (auto [p, e, n] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned>>{
           {2, 1, 1}, {2, 1, 2}, {3, 2, 1}, {3, 1, 2}, {2, 3, 1}, {2, 1, 3}, {2, 1, 6}, {2, 2, 3}, {2, 1, 8},
           {7, 1, 2}, {5, 1, 4}, {2, 1, 12}, {2, 2, 6}, {2, 4, 3}, {3, 1, 6}, {4093, 1, 1}}) {
    if (!arith::is_prime_u64(p)) continue;
    const auto r = self_test(p, e, n);
    EXPECT_TRUE(r.passed()) << p << "," << e << "," << n << " gauss " << r.gauss_rel << " omega " << r.omega_dev
                            << " Omega " << r.Omega_dev << " mism " << r.order_count_mismatches << " cn "
                            << r.cn_identity_dev << "/" << r.cn_constrained_dev;
    EXPECT_GT(r.order_classes, 0u);
    EXPECT_NEAR(r.omega_zero, r.theta, 1e-12);
  }
}

TEST(Chars, GaussF9) {
  CharSystem f9(3, 1, 2);
  const auto& F = f9.field();
  for (std::uint32_t j = 1; j < 8; ++j) {
    for (Elem a = 0; a < 8; ++a) {
      Complex s = 0;
      for (Elem x = 0; x < 8; ++x) s += f9.chi(j, x) * f9.psi(a, x);
      EXPECT_NEAR(std::abs(s), 3.0, 1e-12);
    }
    Complex triv = 0;  // trivial psi
    for (Elem x = 0; x <= 8; ++x) triv += f9.chi(j, x) * f9.psi(F.zero(), x);
    EXPECT_NEAR(std::abs(triv), 0.0, 1e-12);
  }
}
