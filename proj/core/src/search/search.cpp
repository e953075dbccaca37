#include "pcnlab/search/search.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include <json.hpp>

#include "pcnlab/arith/numtheory.hpp"
#include "pcnlab/ffield/small_field.hpp"
#include "pcnlab/fqxpoly/normality.hpp"

namespace pcnlab::search {

using ffield::FFElem;
using ffield::FieldCtx;
using ffield::SmallField;
using Json = nlohmann::ordered_json;

namespace {

arith::PrimePowerForm form_of(std::uint64_t q) {
  auto f = arith::prime_power_form(q);
  if (!f) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  if (f->p >= (std::uint64_t{1} << 31)) throw std::invalid_argument("characteristic too large");
  return *f;
}

arith::IntFactorization complete_factors(std::uint64_t q, std::uint64_t n, const arith::FactorBudget& budget) {
  auto f = arith::factor_qn_minus_1(q, n, budget);
  if (!f.complete)
    throw std::runtime_error("blocked on factoring q^n - 1 for (q, n) = (" + std::to_string(q) + ", " +
                             std::to_string(n) + "), cofactor " + f.cofactor.get_str());
  return f;
}

std::vector<std::uint64_t> proper_divisors(std::uint64_t n) {
  auto d = arith::divisors(n);
  d.pop_back();
  return d;
}

std::string u(std::uint64_t v) { return std::to_string(v); }

std::uint64_t parse_u64(const Json& j, const char* what) {
  if (!j.is_string()) throw std::invalid_argument(std::string("expected decimal string for ") + what);
  const auto& s = j.get_ref<const std::string&>();
  if (s.empty() || s.size() > 20 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument(std::string("bad integer for ") + what);
  const BigInt v = parse_decimal(s);
  if (!fits_u64(v)) throw std::invalid_argument(std::string("integer out of range for ") + what);
  return big_to_u64(v);
}

BigInt parse_big(const Json& j, const char* what) {
  if (!j.is_string()) throw std::invalid_argument(std::string("expected decimal string for ") + what);
  const auto& s = j.get_ref<const std::string&>();
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument(std::string("bad integer for ") + what);
  return parse_decimal(s);
}

std::vector<std::uint32_t> parse_coeffs(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string("expected array for ") + what);
  std::vector<std::uint32_t> out;
  for (const auto& v : j) {
    const std::uint64_t c = parse_u64(v, what);
    if (c > UINT32_MAX) throw std::invalid_argument(std::string("coefficient out of range in ") + what);
    out.push_back(static_cast<std::uint32_t>(c));
  }
  return out;
}

}  // namespace

std::string to_string(Strategy s) { return s == Strategy::kExhaustive ? "exhaustive" : "random"; }

Counts count_cn_pcn(std::uint64_t q, std::uint64_t n, const CountOptions& opt) {
  const auto form = form_of(q);
  if (n == 0) throw std::invalid_argument("n must be positive");
  const BigInt size = big_pow(q, n);
  if (size > big_from_u64(opt.cap)) throw std::length_error("q^n = " + size.get_str() + " above the enumeration cap");

  FieldCtx ctx = ffield::make_field(static_cast<std::uint32_t>(form.p), form.e, static_cast<unsigned>(n));
  ctx.set_group_order_factors(complete_factors(q, n, opt.budget));
  const SmallField f(ctx, opt.cap);
  const auto divs = arith::divisors(n);

  struct Local {
    std::uint64_t prim = 0, cn = 0, pcn = 0;
    std::vector<std::uint64_t> normal;
  };
  const unsigned workers = std::max(1u, opt.threads);
  std::vector<Local> locals(workers, Local{0, 0, 0, std::vector<std::uint64_t>(divs.size(), 0)});
  auto work = [&](unsigned w) {
    Local& loc = locals[w];
    for (std::uint32_t idx = 1 + w; idx < f.size(); idx += workers) {
      const auto x = f.from_index(idx);
      const bool prim = f.is_primitive(x);
      bool all = true;
      for (std::size_t i = 0; i < divs.size(); ++i) {
        const bool nl = fqxpoly::normality_test(f, x, static_cast<unsigned>(divs[i]));
        loc.normal[i] += nl;
        all = all && nl;
      }
      loc.prim += prim;
      loc.cn += all;
      loc.pcn += prim && all;
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  Counts c;
  c.q = q;
  c.n = n;
  c.size = f.size();
  for (std::size_t i = 0; i < divs.size(); ++i) c.normal_over.push_back({divs[i], 0});
  for (const auto& loc : locals) {
    c.primitive += loc.prim;
    c.cn += loc.cn;
    c.pcn += loc.pcn;
    for (std::size_t i = 0; i < divs.size(); ++i) c.normal_over[i].second += loc.normal[i];
  }
  return c;
}

PcnCertificate make_certificate(const FieldCtx& f, const FFElem& x, const arith::IntFactorization& order_factors) {
  PcnCertificate c;
  c.p = f.p();
  c.e = f.e();
  c.n = f.n();
  c.modulus = f.modulus();
  c.element = x.coords;
  c.order_factors = order_factors;
  const BigInt Q1 = f.group_order();
  for (const auto& r : order_factors.distinct_primes())
    c.primitivity_checks.push_back({r, !f.is_zero(x) && !f.is_one(f.pow(x, BigInt(Q1 / r)))});
  for (std::uint64_t l : proper_divisors(f.n()))
    c.normality_divisors.push_back({l, fqxpoly::normality_test(f, x, static_cast<unsigned>(l))});
  return c;
}

PcnCertificate find_pcn(std::uint64_t q, std::uint64_t n, const SearchOptions& opt) {
  const auto form = form_of(q);
  if (n == 0) throw std::invalid_argument("n must be positive");
  FieldCtx f = ffield::make_field(static_cast<std::uint32_t>(form.p), form.e, static_cast<unsigned>(n));
  const auto factors = complete_factors(q, n, opt.budget);
  f.set_group_order_factors(factors);

  std::optional<FFElem> found;
  std::uint64_t trials = 0;
  if (opt.strategy == Strategy::kExhaustive) {
    if (f.size() <= big_from_u64(SmallField::kDefaultCap)) {
      const SmallField s(f);
      for (std::uint32_t idx = 1; idx < s.size() && trials < opt.max_trials && !found; ++idx) {
        ++trials;
        const auto x = s.from_index(idx);
        if (s.is_primitive(x) && fqxpoly::is_completely_normal(s, x)) found = s.to_elem(x);
      }
    } else {
      if (!fits_u64(f.size()) || f.size() > big_pow(2, 32))
        throw std::length_error("exhaustive search limited to 2^32 elements");
      const std::uint64_t size = big_to_u64(f.size());
      for (std::uint64_t idx = 1; idx < size && trials < opt.max_trials && !found; ++idx) {
        ++trials;
        const auto x = f.from_index(idx);
        if (f.is_primitive(x) && fqxpoly::is_completely_normal(f, x)) found = x;
      }
    }
  } else {
    std::mt19937_64 rng(opt.seed);
    while (trials < opt.max_trials && !found) {
      ++trials;
      const auto x = f.random(rng);
      if (f.is_zero(x)) continue;
      if (f.is_primitive(x) && fqxpoly::is_completely_normal(f, x)) found = x;
    }
  }
  if (!found)
    throw SearchExhausted("no primitive completely normal element found for (q, n) = (" + u(q) + ", " + u(n) +
                              ") within " + u(trials) + " trials",
                          trials);
  auto cert = make_certificate(f, *found, factors);
  cert.strategy = opt.strategy;
  cert.seed = opt.strategy == Strategy::kRandom ? opt.seed : 0;
  cert.trials = trials;
  return cert;
}

Verification verify_certificate(const PcnCertificate& cert) {
  auto fail = [](const char* why) { return Verification{false, why}; };
  if (cert.e == 0 || cert.n == 0 || !arith::is_prime_u64(cert.p)) return fail("bad_parameters");
  std::optional<FieldCtx> fo;
  try {
    fo.emplace(cert.p, cert.e, cert.n, cert.modulus);
  } catch (const std::exception&) {
    return fail("modulus_invalid");
  }
  const FieldCtx& f = *fo;
  if (cert.element.size() != f.degree() ||
      std::any_of(cert.element.begin(), cert.element.end(), [&](std::uint32_t c) { return c >= cert.p; }))
    return fail("element_malformed");
  const FFElem x = f.from_coords(cert.element);
  if (f.is_zero(x)) return fail("element_zero");

  const auto& of = cert.order_factors;
  if (of.value != f.group_order()) return fail("order_value_mismatch");
  if (!of.complete || of.cofactor != 1) return fail("factorization_incomplete");
  for (std::size_t i = 0; i < of.factors.size(); ++i) {
    if (of.factors[i].exponent == 0 || (i > 0 && !(of.factors[i - 1].prime < of.factors[i].prime)))
      return fail("factorization_malformed");
    if (of.factors[i].prime < 2 || arith::primality(of.factors[i].prime) == arith::Primality::kComposite)
      return fail("factor_not_prime");
  }
  if (of.product() != of.value) return fail("factor_product_mismatch");

  const auto primes = of.distinct_primes();
  if (cert.primitivity_checks.size() != primes.size()) return fail("primitivity_cover_mismatch");
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const auto& chk = cert.primitivity_checks[i];
    if (chk.prime != primes[i]) return fail("primitivity_cover_mismatch");
    const bool holds = !f.is_one(f.pow(x, BigInt(of.value / chk.prime)));
    if (holds != chk.holds) return fail("primitivity_check_mismatch");
    if (!holds) return fail("not_primitive");
  }

  const auto divs = proper_divisors(cert.n);
  if (cert.normality_divisors.size() != divs.size()) return fail("normality_cover_incomplete");
  for (std::size_t i = 0; i < divs.size(); ++i) {
    const auto& chk = cert.normality_divisors[i];
    if (chk.l != divs[i]) return fail("normality_cover_incomplete");
    const bool coprime = fqxpoly::normality_test(f, x, static_cast<unsigned>(chk.l));
    if (coprime != chk.coprime) return fail("normality_check_mismatch");
    if (!coprime) return fail("not_normal");
  }
  return {true, "ok"};
}

std::string to_json(const PcnCertificate& c, int indent) {
  Json j;
  j["schema"] = "pcn-lab/1";
  j["kind"] = "pcn_certificate";
  j["p"] = u(c.p);
  j["e"] = u(c.e);
  j["n"] = u(c.n);
  Json mod = Json::array(), el = Json::array();
  for (auto v : c.modulus) mod.push_back(u(v));
  for (auto v : c.element) el.push_back(u(v));
  j["modulus"] = mod;
  j["element"] = el;
  Json of;
  of["value"] = c.order_factors.value.get_str();
  Json fs = Json::array();
  for (const auto& pf : c.order_factors.factors) {
    Json e;
    e["prime"] = pf.prime.get_str();
    e["exponent"] = u(pf.exponent);
    e["certainty"] = pf.certainty == arith::Primality::kPrime ? "prime" : "probable_prime";
    fs.push_back(e);
  }
  of["factors"] = fs;
  of["complete"] = c.order_factors.complete;
  of["cofactor"] = c.order_factors.cofactor.get_str();
  j["order_factors"] = of;
  Json pc = Json::array();
  for (const auto& k : c.primitivity_checks) pc.push_back(Json{{"prime", k.prime.get_str()}, {"holds", k.holds}});
  j["primitivity_checks"] = pc;
  Json nd = Json::array();
  for (const auto& k : c.normality_divisors) nd.push_back(Json{{"l", u(k.l)}, {"coprime", k.coprime}});
  j["normality_divisors"] = nd;
  j["search"] = Json{{"strategy", to_string(c.strategy)}, {"seed", u(c.seed)}, {"trials", u(c.trials)}};
  return j.dump(indent);
}

PcnCertificate certificate_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("certificate is not JSON: ") + e.what());
  }
  try {
    if (j.at("schema") != "pcn-lab/1") throw std::invalid_argument("unsupported schema");
    if (j.at("kind") != "pcn_certificate") throw std::invalid_argument("not a certificate");
    PcnCertificate c;
    const std::uint64_t p = parse_u64(j.at("p"), "p"), e = parse_u64(j.at("e"), "e"), n = parse_u64(j.at("n"), "n");
    if (p > UINT32_MAX || e > 64 || n > (1u << 20)) throw std::invalid_argument("parameters out of range");
    c.p = static_cast<std::uint32_t>(p);
    c.e = static_cast<unsigned>(e);
    c.n = static_cast<unsigned>(n);
    c.modulus = parse_coeffs(j.at("modulus"), "modulus");
    c.element = parse_coeffs(j.at("element"), "element");
    const auto& of = j.at("order_factors");
    c.order_factors.value = parse_big(of.at("value"), "order value");
    for (const auto& fe : of.at("factors")) {
      arith::PrimeFactor pf;
      pf.prime = parse_big(fe.at("prime"), "prime");
      const std::uint64_t ex = parse_u64(fe.at("exponent"), "exponent");
      if (ex > UINT32_MAX) throw std::invalid_argument("exponent out of range");
      pf.exponent = static_cast<unsigned>(ex);
      const auto cert = fe.at("certainty").get<std::string>();
      if (cert != "prime" && cert != "probable_prime") throw std::invalid_argument("bad certainty");
      pf.certainty = cert == "prime" ? arith::Primality::kPrime : arith::Primality::kProbablePrime;
      c.order_factors.factors.push_back(pf);
    }
    c.order_factors.complete = of.at("complete").get<bool>();
    c.order_factors.cofactor = parse_big(of.at("cofactor"), "cofactor");
    for (const auto& k : j.at("primitivity_checks"))
      c.primitivity_checks.push_back({parse_big(k.at("prime"), "prime"), k.at("holds").get<bool>()});
    for (const auto& k : j.at("normality_divisors"))
      c.normality_divisors.push_back({parse_u64(k.at("l"), "l"), k.at("coprime").get<bool>()});
    const auto& s = j.at("search");
    const auto strat = s.at("strategy").get<std::string>();
    if (strat != "random" && strat != "exhaustive") throw std::invalid_argument("bad strategy");
    c.strategy = strat == "random" ? Strategy::kRandom : Strategy::kExhaustive;
    c.seed = parse_u64(s.at("seed"), "seed");
    c.trials = parse_u64(s.at("trials"), "trials");
    return c;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace pcnlab::search
