#include "pcnlab/bounds/pipelines.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pcnlab/arith/numtheory.hpp"
#include "pcnlab/bounds/conditions.hpp"
#include "pcnlab/classify/classify.hpp"

namespace pcnlab::bounds {

namespace {

using Row = std::vector<std::uint64_t>;

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

Stage make_stage(std::string label, std::vector<std::string> columns) {
  return Stage{std::move(label), std::move(columns), {}};
}

// Least prime power q >= start for which cond2 holds; undecided counts as failing.
std::uint64_t least_cond2_q(std::uint64_t n, std::uint64_t start) {
  for (std::uint64_t q = arith::next_prime_power(start);; q = arith::next_prime_power(q + 1)) {
    if (cond2(n, q, false).holds()) return q;
  }
}

struct Table1Row {
  std::uint64_t n, q0, q1;
};

std::optional<Table1Row> table1_row(std::uint64_t n, std::uint64_t offset) {
  if (n < 2 || arith::is_prime_or_prime_square(n)) return std::nullopt;
  const std::uint64_t q0 = arith::next_prime_power(n + offset);
  if (cond2(n, q0, false).holds()) return std::nullopt;
  return Table1Row{n, q0, least_cond2_q(n, q0)};
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

const Stage& PipelineResult::stage(std::string_view label) const {
  for (const auto& s : stages)
    if (s.label == label) return s;
  throw std::out_of_range("no stage " + std::string(label));
}

bool PipelineResult::has_stage(std::string_view label) const {
  return std::any_of(stages.begin(), stages.end(), [&](const Stage& s) { return s.label == label; });
}

Stage table1(const Theorem1Options& opt) {
  Stage st = make_stage("table1", {"n", "q0", "q1"});
  const std::uint64_t offset = opt.q0_from_n_plus_1 ? 1 : 2;
  for (std::uint64_t n = 2; n <= opt.n_max; ++n)
    if (auto r = table1_row(n, offset)) st.rows.push_back({r->n, r->q0, r->q1});
  return st;
}

RobinCrossover robin_crossover(std::uint64_t scan_max, arith::RobinConstant constant) {
  RobinCrossover out;
  for (std::uint64_t n = 3; n <= scan_max; ++n) {
    if (!cond2(n, n + 2, true, constant).holds()) {
      out.violations.push_back(n);
      out.last_violation = n;
    }
  }
  return out;
}

PipelineResult pipeline_theorem1(const Theorem1Options& opt) {
  PipelineResult res;
  res.name = "theorem1";

  Stage t1 = table1(opt);

  // rows whose presence or q0 changes between the n+1 and n+2 readings of q0
  Stage differs = make_stage("q0_reading_differs", {"n"});
  for (std::uint64_t n = 2; n <= opt.n_max; ++n) {
    auto a = table1_row(n, 1), b = table1_row(n, 2);
    if (a.has_value() != b.has_value() || (a && (a->q0 != b->q0 || a->q1 != b->q1))) differs.rows.push_back({n});
  }

  Stage above = make_stage("rows_above_984", {"n"});
  for (const auto& r : t1.rows)
    if (r[0] > 984) above.rows.push_back({r[0]});

  Stage region = make_stage("region", {"n", "q"});
  for (const auto& r : t1.rows)
    for (std::uint64_t q : arith::prime_powers_in(r[1], r[2] - 1)) region.rows.push_back({r[0], q});

  Stage c16 = make_stage("cond3_c16", {"n", "q"});
  for (const auto& r : region.rows)
    if (!cond3(r[1], r[0], W3Mode::kC16, opt.budget).holds()) c16.rows.push_back(r);

  Stage exact = make_stage("cond3_exact", {"n", "q"});
  for (const auto& r : c16.rows)
    if (!cond3(r[1], r[0], W3Mode::kExact, opt.budget).holds()) exact.rows.push_back(r);

  Stage nonbasic = make_stage("not_completely_basic", {"n", "q"});
  for (const auto& r : exact.rows)
    if (!classify::is_completely_basic(r[1], r[0])) nonbasic.rows.push_back(r);

  Stage robin = make_stage("robin_violations", {"n"});
  const auto cross = robin_crossover(opt.robin_scan_max, opt.robin_constant);
  for (auto n : cross.violations) robin.rows.push_back({n});

  res.notes.push_back({"n_max", std::to_string(opt.n_max)});
  res.notes.push_back({"q0_offset", opt.q0_from_n_plus_1 ? "n+1" : "n+2"});
  res.notes.push_back({"robin_scan_max", std::to_string(opt.robin_scan_max)});
  res.notes.push_back({"robin_last_violation", std::to_string(cross.last_violation)});

  res.stages = {std::move(t1),    std::move(region),   std::move(c16),   std::move(exact),
                std::move(nonbasic), std::move(robin), std::move(differs), std::move(above)};
  return res;
}

PipelineResult pipeline_theorem0(const Theorem0Options& opt) {
  PipelineResult res;
  res.name = "theorem0";

  // odd characteristic
  Stage po_pairs = make_stage("p_odd.robin_pairs", {"l", "m"});
  for (std::uint64_t l = 1; l <= opt.p_odd_l_max; ++l)
    for (std::uint64_t m = 3; m <= opt.p_odd_m_max; ++m)
      if (!robin_reduction(Family::kCond2POdd, l, m).holds()) po_pairs.rows.push_back({l, m});

  Stage po_triples = make_stage("p_odd.triples", {"l", "m", "q"});
  for (std::uint64_t l = 1; l <= opt.p_odd_l_max; ++l) {
    for (std::uint64_t m = 2; m <= opt.p_odd_m_max; ++m) {
      for (std::uint64_t q = arith::next_prime_power(std::max<std::uint64_t>(m + 2, 7));;
           q = arith::next_prime_power(q + 1)) {
        if (q % 2 == 0) continue;
        const std::uint64_t p = arith::prime_power_form(q)->p;
        if (m % p != 0 && !cond_p_family(l, m, q, Family::kCond2POdd).holds()) po_triples.rows.push_back({l, m, q});
        // the floor bounds every odd characteristic and grows with q
        if (cond_p_odd_floor(l, m, q).holds()) break;
      }
    }
  }

  auto nonbasic_of = [](const Stage& in, std::string label) {
    Stage out = make_stage(std::move(label), {"l", "m", "q"});
    for (const auto& r : in.rows) {
      const std::uint64_t p = arith::prime_power_form(r[2])->p;
      if (!classify::is_completely_basic(r[2], ipow(p, r[0]) * r[1])) out.rows.push_back(r);
    }
    return out;
  };
  Stage po_nonbasic = nonbasic_of(po_triples, "p_odd.not_completely_basic");

  // characteristic 2, l >= 2
  Stage p2_pairs = make_stage("p2.robin_pairs", {"l", "m"});
  Stage p2_triples = make_stage("p2.triples", {"l", "m", "q"});
  for (std::uint64_t l = 2; l <= opt.p2_l_max; ++l) {
    for (std::uint64_t m = 3; m <= opt.p2_m_max; m += 2) {
      if (!robin_reduction(Family::kCond3P2, l, m).holds()) p2_pairs.rows.push_back({l, m});
      for (std::uint64_t q = 8;; q *= 2) {
        if (q <= m) continue;
        if (cond_p_family(l, m, q, Family::kCond3P2).holds()) break;
        p2_triples.rows.push_back({l, m, q});
      }
    }
  }
  Stage p2_nonbasic = nonbasic_of(p2_triples, "p2.not_completely_basic");

  // characteristic 2, l = 1
  Stage a12_robin = make_stage("a12.robin_failures", {"m"});
  for (std::uint64_t m = 3; m <= opt.a12_robin_scan_max; m += 2)
    if (!robin_reduction(Family::kA12, 1, m).holds()) a12_robin.rows.push_back({m});

  Stage a12_exc = make_stage("a12.exceptions", {"l", "m", "q"});
  for (std::uint64_t m = 3; m <= opt.a12_m_max; m += 2) {
    std::uint64_t q = 8;
    while (q < m + 2) q *= 2;
    for (;; q *= 2) {
      if (cond_p_family(1, m, q, Family::kA12).holds()) break;
      a12_exc.rows.push_back({1, m, q});
    }
  }
  Stage a12_filtered = make_stage("a12.m_not_dividing_q_minus_1", {"l", "m", "q"});
  for (const auto& r : a12_exc.rows)
    if ((r[2] - 1) % r[1] != 0) a12_filtered.rows.push_back(r);

  Stage a12_final = make_stage("a12.main_inequality_fails", {"l", "m", "q"});
  for (const auto& r : a12_filtered.rows)
    if (!main_inequality_lmq(r[0], r[1], r[2], opt.budget).holds()) a12_final.rows.push_back(r);

  res.notes.push_back({"p_odd_box", "l<=" + std::to_string(opt.p_odd_l_max) + ",m<=" + std::to_string(opt.p_odd_m_max)});
  res.notes.push_back({"p2_box", "l<=" + std::to_string(opt.p2_l_max) + ",m<=" + std::to_string(opt.p2_m_max)});
  res.notes.push_back({"a12_robin_last_failure", a12_robin.rows.empty() ? "none" : std::to_string(a12_robin.rows.back()[0])});
  res.notes.push_back({"a12_robin_scan_max", std::to_string(opt.a12_robin_scan_max)});

  res.stages = {std::move(po_pairs), std::move(po_triples), std::move(po_nonbasic), std::move(p2_pairs),
                std::move(p2_triples), std::move(p2_nonbasic), std::move(a12_robin), std::move(a12_exc),
                std::move(a12_filtered), std::move(a12_final)};
  return res;
}

PipelineResult table2(const PipelineResult& thm1, const PipelineResult& thm0) {
  std::vector<Row> raw;
  for (const auto& r : thm1.stage("not_completely_basic").rows) raw.push_back(r);
  for (const char* label : {"p_odd.not_completely_basic", "p2.not_completely_basic", "a12.main_inequality_fails"}) {
    for (const auto& r : thm0.stage(label).rows) {
      const std::uint64_t p = arith::prime_power_form(r[2])->p;
      raw.push_back({ipow(p, r[0]) * r[1], r[2]});
    }
  }
  PipelineResult res;
  res.name = "table2";
  Stage out = make_stage("pairs", {"n", "q"});
  std::set<Row> seen;
  std::vector<std::uint64_t> dup_flat;
  for (const auto& r : raw) {
    if (seen.insert(r).second) out.rows.push_back(r);
    else dup_flat.insert(dup_flat.end(), r.begin(), r.end());
  }
  res.notes.push_back({"raw_count", std::to_string(raw.size())});
  res.notes.push_back({"duplicates", join(dup_flat)});
  res.stages.push_back(std::move(out));
  return res;
}

}  // namespace pcnlab::bounds
