#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pcnlab/arith/numtheory.hpp"
#include "pcnlab/ffield/small_field.hpp"
#include "pcnlab/fqxpoly/cosets.hpp"
#include "pcnlab/fqxpoly/normality.hpp"

using namespace pcnlab;
using namespace pcnlab::fqxpoly;
using pcnlab::ffield::make_field;
using pcnlab::ffield::SmallField;

TEST(Cosets, SpecExamples) {
  using C = std::vector<std::vector<std::uint64_t>>;
  EXPECT_EQ(cyclotomic_cosets(3, 2), (C{{0}, {1, 2}}));
  EXPECT_EQ(cyclotomic_cosets(5, 2), (C{{0}, {1, 2, 3, 4}}));
  EXPECT_EQ(cyclotomic_cosets(6, 7), (C{{0}, {1}, {2}, {3}, {4}, {5}}));
  EXPECT_THROW(cyclotomic_cosets(4, 2), std::invalid_argument);
}

TEST(Cosets, DegreesAreOrbitLengths) {
  for (std::uint64_t m = 1; m < 200; ++m) {
    for (std::uint64_t Q : {2ULL, 3ULL, 4ULL, 5ULL, 7ULL, 9ULL, 11ULL}) {
      if (arith::gcd_u64(Q, m) != 1) continue;
      std::uint64_t total = 0;
      for (const auto& c : cyclotomic_cosets(m, Q)) {
        total += c.size();
        const std::uint64_t a = c.front();
        const std::uint64_t sub = m / arith::gcd_u64(a, m);
        EXPECT_EQ(c.size(), sub == 1 ? 1 : arith::mult_order(Q, sub));
      }
      EXPECT_EQ(total, m);
    }
  }
}

TEST(PolyStats, SpecExamples) {
  for (std::uint64_t q : {3ULL, 5ULL, 9ULL, 25ULL}) {
    auto s = poly_stats(q, arith::prime_power_form(q)->p, 2, 1);
    EXPECT_EQ(s.phi, BigInt(static_cast<unsigned long>((q - 1) * (q - 1))));
    EXPECT_EQ(s.W_sf, 4);
    EXPECT_EQ(s.theta, Rational(static_cast<unsigned long>((q - 1) * (q - 1)), static_cast<unsigned long>(q * q)));
  }
  auto s = poly_stats(2, 2, 4, 1);
  EXPECT_EQ(s.phi, 8);
  EXPECT_EQ(s.W_sf, 2);
  EXPECT_EQ(s.theta, Rational(1, 2));
  auto t = poly_stats(8, 2, 6, 1);
  auto cf = cyc_factorization(8, 6, 1);
  EXPECT_EQ(cf.m_prime, 3u);
  EXPECT_EQ(cf.multiplicity, 2u);
  // 8 = 2 mod 3, so the cosets mod 3 are {0} and {1, 2}
  EXPECT_EQ(cf.coset_degrees, (std::vector<std::uint64_t>{1, 2}));
  EXPECT_EQ(t.phi, BigInt(big_pow(8, 6) / 8 * 7 / 64 * 63));
  EXPECT_EQ(t.W_sf, 4);
  EXPECT_THROW(poly_stats(8, 2, 6, 4), std::invalid_argument);
  // l = n: theta = (q^l - 1)/q^l
  EXPECT_EQ(poly_stats(7, 7, 3, 3).theta, Rational(342, 343));
}

TEST(Normality, SpecExamples) {
  auto f = make_field(2, 1, 4);
  EXPECT_FALSE(normality_test(f, f.one(), 1));
  int count = 0;
  for (std::uint64_t i = 0; i < 16; ++i) count += normality_test(f, f.from_index(i), 1);
  EXPECT_EQ(count, 8);
  EXPECT_FALSE(is_completely_normal(f, f.zero()));
  auto g = make_field(5, 1, 3);
  for (std::uint64_t i = 0; i < 125; ++i) {
    auto x = g.from_index(i);
    // trace zero elements are never normal
    ffield::FFElem tr = g.add(g.add(x, g.frobenius(x, 1)), g.frobenius_iter(x, 1, 2));
    if (g.is_zero(tr)) EXPECT_FALSE(normality_test(g, x, 1));
  }
}

TEST(Normality, GcdTestMatchesRankOracle) {
  for (auto [p, e, n] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned>>{
           {2, 1, 4}, {2, 1, 6}, {2, 2, 4}, {2, 3, 4}, {3, 1, 4}, {3, 1, 6}, {2, 1, 8}, {5, 1, 4}, {7, 1, 3}, {2, 2, 6}, {3, 2, 3}}) {
    auto f = make_field(p, e, n);
    const std::uint64_t size = big_to_u64(f.size());
    for (std::uint64_t l : arith::divisors(n)) {
      std::uint64_t count = 0;
      for (std::uint64_t idx = 0; idx < size; ++idx) {
        auto x = f.from_index(idx);
        const bool t = normality_test(f, x, static_cast<unsigned>(l));
        ASSERT_EQ(t, oracle::is_normal_by_rank(f, x, static_cast<unsigned>(l))) << p << "," << e << "," << n << " l=" << l << " idx=" << idx;
        count += t;
      }
      EXPECT_EQ(BigInt(static_cast<unsigned long>(count)), poly_stats(f.q(), p, n, l).phi) << p << "," << e << "," << n << " l=" << l;
    }
  }
}

TEST(Normality, SmallFieldBackendAgrees) {
  for (auto [p, e, n] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned>>{{2, 1, 6}, {2, 3, 6}, {3, 1, 6}, {7, 1, 3}, {2, 2, 4}}) {
    auto f = make_field(p, e, n);
    SmallField s(f);
    std::mt19937_64 rng(p * 100 + n);
    for (int i = 0; i < 400; ++i) {
      auto x = f.random(rng);
      EXPECT_EQ(is_completely_normal(f, x), is_completely_normal(s, s.from_elem(x)));
    }
  }
}

TEST(Normality, CompletelyNormalF64BruteForce) {
  auto f = make_field(2, 1, 6);
  std::uint64_t cn = 0, brute = 0;
  for (std::uint64_t idx = 0; idx < 64; ++idx) {
    auto x = f.from_index(idx);
    cn += is_completely_normal(f, x);
    bool all = !f.is_zero(x);
    for (unsigned l : {1u, 2u, 3u}) all = all && oracle::is_normal_by_rank(f, x, l);
    brute += all;
  }
  EXPECT_EQ(cn, brute);
}

TEST(Normality, CompletelyBasicF73) {
  auto f = make_field(7, 1, 3);
  std::uint64_t cn = 0;
  for (std::uint64_t idx = 0; idx < 343; ++idx) cn += is_completely_normal(f, f.from_index(idx));
  EXPECT_EQ(BigInt(static_cast<unsigned long>(cn)), poly_stats(7, 7, 3, 1).phi);
  EXPECT_EQ(cn, 216u);
}

TEST(PolyStats, F8Degree6ByEnumeration) {
  SmallField s(make_field(2, 3, 6));
  for (unsigned l : {1u, 2u, 3u}) {
    std::uint64_t count = 0;
    for (std::uint32_t idx = 0; idx < s.size(); ++idx) count += normality_test(s, s.from_index(idx), l);
    EXPECT_EQ(BigInt(static_cast<unsigned long>(count)), poly_stats(8, 2, 6, l).phi) << "l=" << l;
  }
}
