#include "pcnlab/arith/primality.hpp"

#include <array>

namespace pcnlab::arith {
namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

bool mr_u64(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
  a %= n;
  if (a == 0) return true;
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// 3.317044064679887385961981 * 10^24: all 13 bases up to 41 are deterministic below it.
const BigInt& deterministic_limit() {
  static const BigInt limit("3317044064679887385961981", 10);
  return limit;
}

}  // namespace

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::span<const std::uint32_t> small_primes() {
  static const std::vector<std::uint32_t> primes = primes_up_to(999999);
  return primes;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 325, 9375, 28178, 450775, 9780504, 1795265022}) {
    if (!mr_u64(n, a, d, s)) return false;
  }
  return true;
}

namespace detail {

bool miller_rabin(const BigInt& n, unsigned long base) {
  const BigInt n_minus_1 = n - 1;
  BigInt d = n_minus_1;
  const mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  BigInt a = base;
  a %= n;
  if (a == 0) return true;
  BigInt x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (mp_bitcnt_t i = 1; i < s; ++i) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

bool strong_lucas_selfridge(const BigInt& n) {
  // Selfridge method A: first D in 5, -7, 9, -11, ... with Jacobi(D/n) = -1.
  long D = 5;
  for (int attempt = 0;; ++attempt) {
    BigInt bd = D;
    const int j = mpz_jacobi(bd.get_mpz_t(), n.get_mpz_t());
    if (j == -1) break;
    if (j == 0 && abs(bd) != n) return false;
    if (attempt == 20 && mpz_perfect_square_p(n.get_mpz_t())) return false;
    D = D > 0 ? -(D + 2) : -(D - 2);
  }
  const long P = 1;
  const long Q = (1 - D) / 4;

  BigInt d = n + 1;
  const mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  // Binary ladder for U_d, V_d, Q^d mod n.
  BigInt U = 0, V = 2, Qk = 1;
  BigInt U2 = 1, V2 = P, Q2 = Q;  // U_1, V_1, Q^1
  BigInt t1, t2;
  auto mod = [&](BigInt& x) { mpz_mod(x.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t()); };
  auto half = [&](BigInt& x) {
    if (mpz_odd_p(x.get_mpz_t())) x += n;
    mpz_tdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), 1);
  };
  mod(Q2);
  const std::size_t bits = mpz_sizeinbase(d.get_mpz_t(), 2);
  bool first = true;
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(d.get_mpz_t(), i)) {
      if (first) {
        U = U2;
        V = V2;
        Qk = Q2;
        first = false;
      } else {
        // (U,V) <- index sum with (U2,V2)
        t1 = U2 * V + U * V2;
        t2 = V2 * V + BigInt(D) * U2 * U;
        half(t1);
        half(t2);
        U = t1;
        V = t2;
        mod(U);
        mod(V);
        Qk *= Q2;
        mod(Qk);
      }
    }
    if (i + 1 < bits) {
      U2 = U2 * V2;
      mod(U2);
      V2 = V2 * V2 - 2 * Q2;
      mod(V2);
      Q2 *= Q2;
      mod(Q2);
    }
  }
  mod(U);
  mod(V);
  if (U == 0 || V == 0) return true;
  for (mp_bitcnt_t r = 1; r < s; ++r) {
    V = V * V - 2 * Qk;
    mod(V);
    if (V == 0) return true;
    Qk *= Qk;
    mod(Qk);
  }
  return false;
}

}  // namespace detail

Primality primality(const BigInt& n) {
  if (n < 2) return Primality::kComposite;
  if (fits_u64(n)) return is_prime_u64(big_to_u64(n)) ? Primality::kPrime : Primality::kComposite;
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL, 41UL}) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return Primality::kComposite;
  }
  if (n < deterministic_limit()) {
    for (unsigned long a : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL, 41UL}) {
      if (!detail::miller_rabin(n, a)) return Primality::kComposite;
    }
    return Primality::kPrime;
  }
  if (!detail::miller_rabin(n, 2)) return Primality::kComposite;
  if (!detail::strong_lucas_selfridge(n)) return Primality::kComposite;
  return Primality::kProbablePrime;
}

}  // namespace pcnlab::arith
