#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "pcnlab/arith/enclosure.hpp"
#include "pcnlab/arith/factor.hpp"
#include "pcnlab/arith/numtheory.hpp"
#include "pcnlab/arith/primality.hpp"

using namespace pcnlab;
using namespace pcnlab::arith;

TEST(Primality, SmallValuesAgreeWithTrialDivision) {
  for (std::uint64_t n = 0; n < 20000; ++n) {
    EXPECT_EQ(is_prime_u64(n), oracle::is_prime_trial(n)) << n;
    EXPECT_EQ(is_prime(BigInt(static_cast<unsigned long>(n))), oracle::is_prime_trial(n)) << n;
  }
}

TEST(Primality, MersenneAndLargeValues) {
  EXPECT_EQ(primality(big_pow(2, 61) - 1), Primality::kPrime);
  EXPECT_EQ(primality(big_pow(2, 89) - 1), Primality::kProbablePrime);
  EXPECT_EQ(primality(big_pow(2, 127) - 1), Primality::kProbablePrime);
  EXPECT_EQ(primality(big_pow(2, 67) - 1), Primality::kComposite);  // 193707721 * 761838257287
  EXPECT_EQ(primality(big_pow(2, 128) + 1), Primality::kComposite);
  // Carmichael number and a strong pseudoprime to bases 2..37 below the deterministic bound
  EXPECT_EQ(primality(BigInt(561)), Primality::kComposite);
  EXPECT_EQ(primality(parse_decimal("3825123056546413051")), Primality::kComposite);
  EXPECT_EQ(primality(parse_decimal("318665857834031151167461")), Primality::kComposite);
}

TEST(Primality, LucasSelfridgeRejectsStrongBase2Pseudoprimes) {
  // strong pseudoprimes to base 2
  for (unsigned long n : {2047UL, 3277UL, 4033UL, 4681UL, 8321UL, 15841UL, 29341UL, 42799UL, 49141UL}) {
    EXPECT_TRUE(detail::miller_rabin(BigInt(n), 2)) << n;
    EXPECT_FALSE(detail::strong_lucas_selfridge(BigInt(n))) << n;
  }
  for (unsigned long n : {5UL, 7UL, 11UL, 101UL, 7919UL, 1000003UL}) EXPECT_TRUE(detail::strong_lucas_selfridge(BigInt(n))) << n;
  EXPECT_TRUE(detail::strong_lucas_selfridge(big_pow(2, 89) - 1));
  // strong Lucas pseudoprimes are not base-2 strong pseudoprimes
  for (unsigned long n : {5459UL, 5777UL, 10877UL, 16109UL, 18971UL}) {
    EXPECT_TRUE(detail::strong_lucas_selfridge(BigInt(n))) << n;
    EXPECT_FALSE(detail::miller_rabin(BigInt(n), 2)) << n;
  }
}

TEST(Factor, SpecExamples) {
  auto f = factor_int(BigInt(117648));  // 7^6 - 1
  ASSERT_TRUE(f.complete);
  EXPECT_TRUE(validate(f));
  std::vector<std::pair<unsigned long, unsigned>> want{{2, 4}, {3, 2}, {19, 1}, {43, 1}};
  ASSERT_EQ(f.factors.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(f.factors[i].prime, want[i].first);
    EXPECT_EQ(f.factors[i].exponent, want[i].second);
  }
  auto g = factor_qn_minus_1(8, 6);  // 2^18 - 1 = 3^3 7 19 73
  ASSERT_TRUE(g.complete);
  EXPECT_EQ(g.value, 262143);
  EXPECT_EQ(g.product(), 262143);
  EXPECT_EQ(g.factors.size(), 4u);
  auto info = radical_info(g);
  EXPECT_EQ(info.radical, 3 * 7 * 19 * 73);
  EXPECT_EQ(info.num_divisors, 16);
  Rational want_theta(2 * 6 * 18 * 72, 3 * 7 * 19 * 73);
  want_theta.canonicalize();
  EXPECT_EQ(info.theta, want_theta);
}

TEST(Factor, RandomProductsReconstruct) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    BigInt n = 1;
    for (int k = 0; k < 4; ++k) n *= static_cast<unsigned long>(rng() % 4000000000ULL + 2);
    auto f = factor_int(n);
    ASSERT_TRUE(f.complete) << n;
    EXPECT_TRUE(validate(f)) << n;
  }
}

TEST(Factor, U64AgainstTrialDivision) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t n = rng() % 1000000000000ULL + 2;
    EXPECT_EQ(factor_u64(n), oracle::factor_trial(n)) << n;
  }
}

TEST(Factor, CyclotomicSplitMultipliesOut) {
  for (std::uint64_t q : {2ULL, 3ULL, 4ULL, 8ULL, 9ULL, 29ULL, 41ULL}) {
    for (std::uint64_t n : {1ULL, 4ULL, 6ULL, 12ULL, 24ULL}) {
      BigInt prod = 1;
      for (const auto& part : cyclotomic_split(q, n)) prod *= part.value;
      EXPECT_EQ(prod, big_pow(q, n) - 1) << q << "^" << n;
    }
  }
  // Phi_24(7) = 7^8 - 7^4 + 1
  EXPECT_EQ(cyclotomic_value(24, BigInt(7)), BigInt(5764801) - BigInt(2401) + 1);
}

TEST(Factor, LargeTable2Moduli) {
  auto f = factor_qn_minus_1(29, 24);
  ASSERT_TRUE(f.complete);
  EXPECT_TRUE(validate(f));
  auto g = factor_qn_minus_1(9, 21);
  ASSERT_TRUE(g.complete);
  EXPECT_TRUE(validate(g));
}

TEST(Factor, IncompleteFactorizationIsReported) {
  // two 30-digit primes and almost no rho budget
  const BigInt a = parse_decimal("671998030559713968361666935769");
  const BigInt b = parse_decimal("282174488599599500573849980909");
  auto f = factor_int(a * b, FactorBudget{1000, 10});
  EXPECT_FALSE(f.complete);
  EXPECT_EQ(f.product(), a * b);
  EXPECT_THROW(radical_info(f), std::invalid_argument);
}

TEST(NumberTheory, DivisorFunctionsAgreeWithOracle) {
  for (std::uint64_t n = 1; n < 3000; ++n) {
    EXPECT_EQ(sigma_t(n), oracle::sigma_naive(n));
    EXPECT_EQ(euler_phi(n), oracle::phi_naive(n));
    EXPECT_EQ(divisors(n).size(), oracle::divisor_count_naive(n));
  }
}

TEST(NumberTheory, MultOrderAndPFreePart) {
  EXPECT_EQ(mult_order(8, 3), 2u);
  EXPECT_EQ(mult_order(2, 7), 3u);
  EXPECT_EQ(p_free_part(12, 2), 3u);
  EXPECT_EQ(p_free_part(45, 3), 5u);
  EXPECT_THROW(mult_order(6, 4), std::invalid_argument);
  for (std::uint64_t m = 2; m < 300; ++m)
    for (std::uint64_t q = 2; q < 60; ++q)
      if (std::gcd(q, m) == 1) EXPECT_EQ(mult_order(q, m), oracle::mult_order_naive(q, m)) << q << " " << m;
}

TEST(NumberTheory, SmallPrimeDivisorsMatchFactorization) {
  for (std::uint64_t q : prime_powers_in(2, 200)) {
    for (std::uint64_t n = 1; n <= 12; ++n) {
      if (!fits_u64(big_pow(q, n))) continue;
      auto f = factor_qn_minus_1(q, n);
      if (!f.complete) continue;
      std::vector<std::uint64_t> want;
      for (const auto& pf : f.factors)
        if (pf.prime <= 65536) want.push_back(big_to_u64(pf.prime));
      EXPECT_EQ(small_prime_divisors(q, n, 65536), want) << q << "^" << n;
    }
  }
}

TEST(NumberTheory, PrimePowers) {
  EXPECT_EQ(next_prime_power(8), 8u);
  EXPECT_EQ(next_prime_power(10), 11u);
  EXPECT_EQ(next_prime_power(362), 367u);
  auto pp = prime_powers_in(1, 32);
  std::vector<std::uint64_t> want{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32};
  EXPECT_EQ(pp, want);
  EXPECT_TRUE(is_prime_or_prime_square(49));
  EXPECT_FALSE(is_prime_or_prime_square(8));
}

TEST(Enclosure, RobinExamples) {
  auto r6 = robin_upper(6);
  EXPECT_NEAR(r6.midpoint_double(), 12.90, 0.01);
  EXPECT_TRUE(RealEnclosure::exact(12L, 128).certainly_less(r6));
  auto r3 = robin_upper(3);
  EXPECT_NEAR(r3.midpoint_double(), 21.2, 0.05);
  EXPECT_THROW(robin_upper(2), std::invalid_argument);
}

TEST(Enclosure, RobinBoundHoldsUpTo1e5) {
  // sieve sigma
  const std::uint64_t N = 100000;
  std::vector<std::uint64_t> sigma(N + 1, 0);
  for (std::uint64_t d = 1; d <= N; ++d)
    for (std::uint64_t m = d; m <= N; m += d) sigma[m] += d;
  for (std::uint64_t n = 3; n <= N; ++n) {
    auto r = robin_upper(n, 64);
    ASSERT_GE(r.upper_double(), static_cast<double>(sigma[n])) << n;
  }
}

TEST(Enclosure, IntervalArithmeticContainsTruth) {
  auto two = RealEnclosure::exact(2L, 64);
  auto s = two.pow(Rational(1, 2));
  EXPECT_TRUE((s * s).contains(2.0));
  EXPECT_NEAR(s.midpoint_double(), std::sqrt(2.0), 1e-15);
  auto third = RealEnclosure::exact(1L, 64) / RealEnclosure::exact(3L, 64);
  EXPECT_TRUE(mpfr_cmp(third.lower(), third.upper()) < 0);
  EXPECT_THROW(two / RealEnclosure::exact(0L, 64), std::domain_error);
  auto neg = -two * RealEnclosure::exact(3L, 64);
  EXPECT_TRUE(neg.contains(-6.0));
}

TEST(Enclosure, CConstants) {
  EXPECT_EQ(c_constant(std::vector<std::uint64_t>{}, 4).midpoint_double(), 1.0);
  EXPECT_NEAR(c_constant(std::vector<std::uint64_t>{3}, 4).midpoint_double(), 2.0 / std::pow(3.0, 0.25), 1e-12);
  EXPECT_THROW(c_constant(std::vector<std::uint64_t>{17}, 4), std::invalid_argument);
  auto s4 = c_constant_supremum(4, false);
  auto s4o = c_constant_supremum(4, true);
  auto s8 = c_constant_supremum(8, false);
  auto s8o = c_constant_supremum(8, true);
  EXPECT_TRUE(c_constant_below(s4.primes, 4, Rational(49, 10)));
  EXPECT_TRUE(c_constant_below(s4o.primes, 4, Rational(29, 10)));
  EXPECT_TRUE(c_constant_below(s8.primes, 8, rational_from_decimal("4514.7")));
  EXPECT_TRUE(c_constant_below(s8o.primes, 8, rational_from_decimal("2461.62")));
  EXPECT_LT(s8.value.upper_double(), 4514.7);
  EXPECT_GT(s8.value.lower_double(), 4514.0);
  EXPECT_LT(s8o.value.upper_double(), 2461.62);
  EXPECT_GT(s8o.value.lower_double(), 2461.0);
}

TEST(Bigint, DecimalRationals) {
  EXPECT_EQ(rational_from_decimal("4514.7"), Rational(45147, 10));
  EXPECT_EQ(rational_from_decimal("5.61e23"), Rational(BigInt(561) * big_pow(10, 21)));
  EXPECT_EQ(rational_from_decimal("0.6483"), Rational(6483, 10000));
  EXPECT_EQ(to_string(Rational(1, 2)), "1/2");
  EXPECT_EQ(to_string(Rational(-7, 3)), "-7/3");
}

TEST(Factor, AurifeuillianSplitCompletes) {
  // 2^540 - 1 leaves a 105-bit two-prime cofactor without the split
  auto f = arith::factor_qn_minus_1(64, 90);
  ASSERT_TRUE(f.complete);
  EXPECT_TRUE(arith::validate(f));
  EXPECT_EQ(f.value, big_pow(2, 540) - 1);
}
