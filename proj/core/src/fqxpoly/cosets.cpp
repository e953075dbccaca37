#include "pcnlab/fqxpoly/cosets.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pcnlab/arith/numtheory.hpp"

namespace pcnlab::fqxpoly {

std::vector<std::vector<std::uint64_t>> cyclotomic_cosets(std::uint64_t m, std::uint64_t Q) {
  if (m == 0) throw std::invalid_argument("cyclotomic_cosets: m must be positive");
  if (arith::gcd_u64(Q % m, m) != 1 && m != 1)
    throw std::invalid_argument("cyclotomic_cosets: gcd(Q, m) != 1 for m = " + std::to_string(m));
  const std::uint64_t Qm = Q % m;
  std::vector<bool> seen(m, false);
  std::vector<std::vector<std::uint64_t>> out;
  for (std::uint64_t a = 0; a < m; ++a) {
    if (seen[a]) continue;
    std::vector<std::uint64_t> orbit;
    std::uint64_t x = a;
    do {
      seen[x] = true;
      orbit.push_back(x);
      x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * Qm % m);
    } while (x != a);
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

CycFactorization cyc_factorization(std::uint64_t q, std::uint64_t n, std::uint64_t l) {
  auto form = arith::prime_power_form(q);
  if (!form) throw std::invalid_argument("cyc_factorization: q must be a prime power");
  if (l == 0 || n % l != 0) throw std::invalid_argument("cyc_factorization: l = " + std::to_string(l) + " does not divide n");
  CycFactorization f;
  f.l = l;
  f.m_prime = arith::p_free_part(n / l, form->p);
  f.multiplicity = n / l / f.m_prime;
  const std::uint64_t Q = arith::powmod_u64(q % f.m_prime, l, f.m_prime == 1 ? 1 : f.m_prime);
  for (const auto& c : cyclotomic_cosets(f.m_prime, f.m_prime == 1 ? 1 : Q)) f.coset_degrees.push_back(c.size());
  std::sort(f.coset_degrees.begin(), f.coset_degrees.end());
  return f;
}

PolyStats poly_stats(std::uint64_t q, std::uint64_t p, std::uint64_t n, std::uint64_t l) {
  auto form = arith::prime_power_form(q);
  if (!form || form->p != p) throw std::invalid_argument("poly_stats: q must be a power of p");
  const auto f = cyc_factorization(q, n, l);
  PolyStats s;
  s.theta = 1;
  for (std::uint64_t d : f.coset_degrees) {
    const BigInt qd = big_pow(q, l * d);
    s.theta *= Rational(qd - 1, qd);
  }
  s.theta.canonicalize();
  Rational phi = Rational(big_pow(q, n)) * s.theta;
  s.phi = phi.get_num();
  if (phi.get_den() != 1) throw std::logic_error("poly_stats: phi not integral");
  mpz_ui_pow_ui(s.W_sf.get_mpz_t(), 2, f.coset_degrees.size());
  return s;
}

}  // namespace pcnlab::fqxpoly
