#include "cli.hpp"

#include <mpfr.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>
#include <thread>

#include "pcnlab/arith/numtheory.hpp"
#include "pcnlab/bounds/compare.hpp"
#include "pcnlab/chars/chars.hpp"
#include "pcnlab/classify/classify.hpp"
#include "pcnlab/search/search.hpp"

namespace pcnlab::cli {

using Json = nlohmann::ordered_json;
using bounds::BoundReport;
using bounds::ConditionId;
using bounds::PipelineResult;
using bounds::Stage;

namespace {

constexpr const char* kSchema = "pcn-lab/1";

enum Exit { kOk = 0, kFails = 1, kError = 2 };

Json header(const char* kind) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = kind;
  return j;
}

std::string mpfr_text(const mpfr_t x, bool round_up) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, round_up ? "%.17RUg" : "%.17RDg", x);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::string csv_stage(const Stage& s) {
  std::string out;
  for (std::size_t i = 0; i < s.columns.size(); ++i) out += (i ? "," : "") + s.columns[i];
  out += '\n';
  for (const auto& r : s.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + std::to_string(r[i]);
    out += '\n';
  }
  return out;
}

std::string text_stage(const Stage& s, bool rows) {
  std::string out = s.label + ": " + std::to_string(s.count()) + "\n";
  if (!rows) return out;
  for (const auto& r : s.rows) {
    out += "  (";
    for (std::size_t i = 0; i < r.size(); ++i) out += (i ? ", " : "") + std::to_string(r[i]);
    out += ")\n";
  }
  return out;
}

std::string explain_condition(const BoundReport& r) {
  std::string s = "condition " + bounds::to_string(r.id) + (r.robin_variant ? " (Robin form)" : "") + ": " +
                  bounds::formula(r.id, r.robin_variant) + "\n";
  s += "decided with interval arithmetic at " + std::to_string(r.cmp.precision) + " bits";
  if (r.cmp.exact_fallback) s += ", then exactly by raising both sides to a common integer power";
  return s + "\n";
}

// Options shared by every subcommand, bound to a RunConfig.
struct Globals {
  RunConfig cfg;
  std::string format = "text";
  std::string stage;

  void attach(CLI::App& app) {
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->envname("PCNLAB_FORMAT");
    app.add_flag("--explain", cfg.explain, "Print the inequality or criterion behind each verdict");
    app.add_option("--precision-bits", cfg.precision_bits, "Starting MPFR precision for inequality checks")
        ->check(CLI::Range(16u, 1u << 16))
        ->envname("PCNLAB_PRECISION_BITS");
    app.add_option("--enumeration-cap", cfg.enumeration_cap, "Largest field enumerated by count")
        ->check(CLI::PositiveNumber)
        ->envname("PCNLAB_ENUMERATION_CAP");
    app.add_option("--trial-bound", cfg.factoring_budget.trial_bound, "Trial division bound for factoring")
        ->check(CLI::PositiveNumber)
        ->envname("PCNLAB_TRIAL_BOUND");
    app.add_option("--rho-iterations", cfg.factoring_budget.rho_iterations, "Pollard rho iterations per cofactor")
        ->check(CLI::PositiveNumber)
        ->envname("PCNLAB_RHO_ITERATIONS");
    app.add_option("--seed", cfg.random_seed, "Random search seed")->envname("PCNLAB_SEED");
    app.add_option("--max-trials", cfg.max_trials, "Search budget")
        ->check(CLI::PositiveNumber)
        ->envname("PCNLAB_MAX_TRIALS");
    app.add_option("--threads", cfg.threads, "Worker threads for enumeration (0 = hardware)")->envname("PCNLAB_THREADS");

    auto& t1 = cfg.thm1;
    auto& t0 = cfg.thm0;
    app.add_option("--n-max", t1.n_max, "Largest n for the threshold scan")->check(CLI::PositiveNumber)->envname("PCNLAB_N_MAX");
    app.add_flag("--q0-from-n-plus-1", t1.q0_from_n_plus_1, "Start threshold rows at the least prime power >= n+1");
    app.add_option("--robin-scan-max", t1.robin_scan_max, "Robin crossover scan limit")
        ->check(CLI::PositiveNumber)
        ->envname("PCNLAB_ROBIN_SCAN_MAX");
    app.add_option("--p-odd-l-max", t0.p_odd_l_max)->check(CLI::PositiveNumber)->envname("PCNLAB_P_ODD_L_MAX");
    app.add_option("--p-odd-m-max", t0.p_odd_m_max)->check(CLI::PositiveNumber)->envname("PCNLAB_P_ODD_M_MAX");
    app.add_option("--p2-l-max", t0.p2_l_max)->check(CLI::PositiveNumber)->envname("PCNLAB_P2_L_MAX");
    app.add_option("--p2-m-max", t0.p2_m_max)->check(CLI::PositiveNumber)->envname("PCNLAB_P2_M_MAX");
    app.add_option("--a12-m-max", t0.a12_m_max)->check(CLI::PositiveNumber)->envname("PCNLAB_A12_M_MAX");
    app.add_option("--a12-robin-scan-max", t0.a12_robin_scan_max)
        ->check(CLI::PositiveNumber)
        ->envname("PCNLAB_A12_ROBIN_SCAN_MAX");
    app.add_option("--stage", stage, "Emit only this pipeline stage");
  }

  void finish() {
    cfg.output_format = format == "json" ? Format::kJson : format == "csv" ? Format::kCsv : Format::kText;
    if (cfg.threads == 0) cfg.threads = std::max(1u, std::thread::hardware_concurrency());
    cfg.thm1.budget = cfg.factoring_budget;
    cfg.thm0.budget = cfg.factoring_budget;
    bounds::set_initial_precision(cfg.precision_bits);
  }
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::uint64_t checked_prime_power(std::uint64_t q) {
  if (!arith::prime_power_form(q)) throw UsageError("q = " + std::to_string(q) + " is not a prime power");
  return q;
}

BoundReport run_condition(ConditionId id, const std::vector<std::uint64_t>& a, bool reduction, const RunConfig& cfg,
                          const std::string& w_mode, unsigned w_a) {
  using namespace bounds;
  const auto& B = cfg.factoring_budget;
  auto need = [&](std::size_t k, const char* shape) {
    if (a.size() != k) throw UsageError(to_string(id) + " takes " + shape);
    for (auto v : a)
      if (v == 0) throw UsageError("parameters must be positive");
  };
  auto family = [&](Family fam) {
    if (reduction) {
      need(2, "<l> <m> with --reduction");
      return robin_reduction(fam, a[0], a[1]);
    }
    need(3, "<l> <m> <q>");
    return cond_p_family(a[0], a[1], checked_prime_power(a[2]), fam);
  };
  switch (id) {
    case ConditionId::kIpPcn1: {
      need(2, "<q> <n>");
      const WMode mode = w_mode == "exact" ? WMode::kExact : w_mode == "lemma" ? WMode::kLemmaA : WMode::kCAExact;
      return main_inequality(checked_prime_power(a[0]), a[1], mode, w_a, B);
    }
    case ConditionId::kCond1: need(2, "<q> <n>"); return cond1(checked_prime_power(a[0]), a[1], B);
    case ConditionId::kCond2: need(2, "<q> <n>"); return cond2(a[1], a[0], false);
    case ConditionId::kCond2Robin: need(2, "<q> <n>"); return cond2(a[1], a[0], true);
    case ConditionId::kCond3ExactW: need(2, "<q> <n>"); return cond3(checked_prime_power(a[0]), a[1], W3Mode::kExact, B);
    case ConditionId::kCond3C16: need(2, "<q> <n>"); return cond3(checked_prime_power(a[0]), a[1], W3Mode::kC16, B);
    case ConditionId::kIpPcn2: need(3, "<l> <m> <q>"); return main_inequality_lmq(a[0], a[1], checked_prime_power(a[2]), B);
    case ConditionId::kCondL1: need(3, "<l> <m> <q>"); return cond_l1(a[0], a[1], checked_prime_power(a[2]), B);
    case ConditionId::kCond2POdd: return family(Family::kCond2POdd);
    case ConditionId::kCond3P2: return family(Family::kCond3P2);
    case ConditionId::kCondA12: return family(Family::kA12);
  }
  throw UsageError("unknown condition");
}

int verdict_exit(bounds::Verdict v) {
  return v == bounds::Verdict::kHolds ? kOk : v == bounds::Verdict::kFails ? kFails : kError;
}

std::string emit_certificate_text(const search::PcnCertificate& c) {
  std::ostringstream o;
  o << "field F_" << c.p << "^" << c.e * c.n << " as degree " << c.n << " over F_" << c.p << "^" << c.e << "\n";
  o << "modulus (ascending):";
  for (auto v : c.modulus) o << ' ' << v;
  o << "\nelement (power basis):";
  for (auto v : c.element) o << ' ' << v;
  o << "\nq^n - 1 = " << c.order_factors.value.get_str() << " =";
  for (std::size_t i = 0; i < c.order_factors.factors.size(); ++i) {
    const auto& f = c.order_factors.factors[i];
    o << (i ? " *" : "") << ' ' << f.prime.get_str();
    if (f.exponent > 1) o << '^' << f.exponent;
  }
  o << "\nstrategy " << search::to_string(c.strategy) << ", seed " << c.seed << ", trials " << c.trials << "\n";
  return o.str();
}

Json self_test_json(const chars::SelfTestReport& r) {
  Json j = header("chars_selftest");
  j["p"] = r.p;
  j["e"] = r.e;
  j["n"] = r.n;
  j["size"] = r.size;
  j["passed"] = r.passed();
  j["orthogonality"] = Json{{"multiplicative", r.orth_mult}, {"multiplicative_dual", r.orth_mult_dual},
                            {"additive", r.orth_add}, {"tolerance_multiplicative", r.orth_tol_mult},
                            {"tolerance_additive", r.orth_tol_add}};
  j["gauss"] = Json{{"max_relative_deviation", r.gauss_rel}, {"pairs", r.gauss_pairs}};
  j["omega"] = Json{{"max_deviation", r.omega_dev}, {"at_zero", r.omega_zero}, {"theta", r.theta}};
  j["Omega"] = Json{{"max_deviation", r.Omega_dev}, {"max_at_zero", r.Omega_zero}, {"sum_relative_deviation", r.Omega_sum_rel}};
  j["additive_orders"] = Json{{"classes", r.order_classes}, {"count_mismatches", r.order_count_mismatches},
                              {"lattice_shape_ok", r.lattice_shape_ok}};
  if (r.n >= 2)
    j["cn_identity"] = Json{{"cn", r.cn}, {"pointwise_relative_deviation", r.cn_identity_dev},
                            {"constrained_relative_deviation", r.cn_constrained_dev}};
  return j;
}

}  // namespace

std::string emit(const PipelineResult& r, Format f) {
  if (f == Format::kJson) {
    Json j = header("pipeline");
    j["name"] = r.name;
    Json stages = Json::array();
    for (const auto& s : r.stages) {
      Json rows = Json::array();
      for (const auto& row : s.rows) rows.push_back(row);
      stages.push_back(Json{{"label", s.label}, {"columns", s.columns}, {"count", s.count()}, {"rows", rows}});
    }
    j["stages"] = stages;
    Json notes = Json::object();
    for (const auto& [k, v] : r.notes) notes[k] = v;
    j["notes"] = notes;
    return j.dump(2) + "\n";
  }
  std::string out;
  if (f == Format::kCsv) {
    // first block is the primary table; a stage,count block closes the output
    for (const auto& s : r.stages) out += csv_stage(s) + "\n";
    out += "stage,count\n";
    for (const auto& s : r.stages) out += s.label + "," + std::to_string(s.count()) + "\n";
    return out;
  }
  out = r.name + "\n";
  for (const auto& s : r.stages) out += text_stage(s, s.count() <= 64);
  for (const auto& [k, v] : r.notes) out += k + " = " + v + "\n";
  return out;
}

PipelineResult pipeline_from_json(const std::string& text) {
  const Json j = Json::parse(text);
  if (j.at("schema") != kSchema || j.at("kind") != "pipeline") throw std::invalid_argument("not a pipeline report");
  PipelineResult r;
  r.name = j.at("name").get<std::string>();
  for (const auto& s : j.at("stages")) {
    Stage st{s.at("label").get<std::string>(), s.at("columns").get<std::vector<std::string>>(),
             s.at("rows").get<std::vector<std::vector<std::uint64_t>>>()};
    if (st.count() != s.at("count").get<std::size_t>()) throw std::invalid_argument("stage count mismatch");
    r.stages.push_back(std::move(st));
  }
  for (const auto& [k, v] : j.at("notes").items()) r.notes.emplace_back(k, v.get<std::string>());
  return r;
}

std::string emit(const BoundReport& r, Format f) {
  const bool lmq = r.triple;
  auto side = [&](const arith::RealEnclosure& e, const std::optional<Rational>& exact) {
    Json s{{"lower", mpfr_text(e.lower(), false)}, {"upper", mpfr_text(e.upper(), true)}};
    if (exact) s["exact"] = exact->get_str();
    return s;
  };
  if (f == Format::kJson) {
    Json j = header("bound");
    j["condition"] = bounds::to_string(r.id);
    j["robin_variant"] = r.robin_variant;
    Json params;
    if (lmq) {
      params["l"] = r.l;
      params["m"] = r.m;
    }
    if (r.q) params["q"] = r.q;
    if (!lmq) params["n"] = r.n;
    j["params"] = params;
    j["verdict"] = bounds::to_string(r.verdict());
    j["lhs"] = side(r.cmp.lhs, r.lhs_exact);
    j["rhs"] = side(r.cmp.rhs, r.rhs_exact);
    j["precision_bits"] = r.cmp.precision;
    j["exact_fallback"] = r.cmp.exact_fallback;
    return j.dump(2) + "\n";
  }
  if (f == Format::kCsv) {
    std::string head = lmq ? "l,m,q" : "q,n";
    std::string row = lmq ? std::to_string(r.l) + "," + std::to_string(r.m) + "," + std::to_string(r.q)
                          : std::to_string(r.q) + "," + std::to_string(r.n);
    return "condition," + head + ",verdict,lhs_lower,lhs_upper,rhs_lower,rhs_upper\n" + bounds::to_string(r.id) + "," +
           row + "," + bounds::to_string(r.verdict()) + "," + mpfr_text(r.cmp.lhs.lower(), false) + "," +
           mpfr_text(r.cmp.lhs.upper(), true) + "," + mpfr_text(r.cmp.rhs.lower(), false) + "," +
           mpfr_text(r.cmp.rhs.upper(), true) + "\n";
  }
  std::ostringstream o;
  o << bounds::to_string(r.id) << (r.robin_variant ? " (Robin)" : "") << ' ';
  if (lmq) o << "(l, m, q) = (" << r.l << ", " << r.m << ", " << r.q << ")";
  else o << "(q, n) = (" << r.q << ", " << r.n << ")";
  o << ": " << bounds::to_string(r.verdict()) << "\n";
  o << "  lhs in [" << mpfr_text(r.cmp.lhs.lower(), false) << ", " << mpfr_text(r.cmp.lhs.upper(), true) << "]\n";
  o << "  rhs in [" << mpfr_text(r.cmp.rhs.lower(), false) << ", " << mpfr_text(r.cmp.rhs.upper(), true) << "]\n";
  return o.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Primitive completely normal elements: classification, bounds, searches and certificates", "pcn-lab"};
  app.require_subcommand(1);
  Globals g;
  g.attach(app);
  // options are global; let them follow the subcommand too
  app.fallthrough();

  std::uint64_t q = 0, n = 0, p = 0, e = 0;
  auto* classify_cmd = app.add_subcommand("classify", "Is (q, n) completely basic?");
  classify_cmd->add_option("q", q)->required()->check(CLI::PositiveNumber);
  classify_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);

  std::string cond_name, w_mode = "exact";
  std::vector<std::uint64_t> cond_args;
  bool reduction = false;
  unsigned w_a = 8;
  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate one sufficient condition");
  bounds_cmd->add_option("condition", cond_name)->required();
  bounds_cmd->add_option("params", cond_args, "<q> <n>, or <l> <m> <q>")->required();
  bounds_cmd->add_flag("--reduction", reduction, "q-free Robin reduction of a characteristic family (params <l> <m>)");
  bounds_cmd->add_option("--w-mode", w_mode, "W(q') treatment for IP_PCN1")->check(CLI::IsMember({"exact", "lemma", "ca"}));
  bounds_cmd->add_option("--w-a", w_a, "exponent a for --w-mode lemma|ca")->check(CLI::IsMember({4u, 8u, 12u, 16u}));

  std::string which;
  auto* pipe_cmd = app.add_subcommand("pipeline", "Run a reduction pipeline");
  pipe_cmd->add_option("which", which)->required()->check(CLI::IsMember({"thm1", "thm0"}));

  auto* count_cmd = app.add_subcommand("count", "Enumerate primitive, normal and completely normal elements");
  count_cmd->add_option("q", q)->required()->check(CLI::PositiveNumber);
  count_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);

  std::string strategy = "random";
  auto* search_cmd = app.add_subcommand("search", "Find a primitive completely normal element with a certificate");
  search_cmd->add_option("q", q)->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--strategy", strategy)->check(CLI::IsMember({"random", "exhaustive"}))->envname("PCNLAB_STRATEGY");

  std::string cert_file;
  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate from its JSON alone");
  verify_cmd->add_option("certificate", cert_file)->required();

  auto* chars_cmd = app.add_subcommand("chars-selftest", "Character sum checks on F_{p^(en)}, p^(en) <= 4096");
  chars_cmd->add_option("p", p)->required()->check(CLI::PositiveNumber);
  chars_cmd->add_option("e", e)->required()->check(CLI::PositiveNumber);
  chars_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);

  auto* table1_cmd = app.add_subcommand("table1", "Pairs (n, q0, q1) where the uniform condition needs q >= q1");
  auto* table2_cmd = app.add_subcommand("table2", "Pairs (n, q) left after every reduction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    g.finish();
    const RunConfig& cfg = g.cfg;
    const Format fmt = cfg.output_format;

    auto emit_pipeline = [&](const PipelineResult& r) {
      if (g.stage.empty()) {
        out << emit(r, fmt);
        return;
      }
      PipelineResult only{r.name, {r.stage(g.stage)}, r.notes};
      if (fmt == Format::kCsv) out << csv_stage(only.stages[0]);
      else out << emit(only, fmt);
    };

    if (*classify_cmd) {
      checked_prime_power(q);
      const auto c = classify::classify_pair(q, n);
      const std::string verdict = c.completely_basic ? "CompletelyBasic(" + classify::to_string(*c.reason) + ")"
                                                     : std::string("NotCompletelyBasic");
      if (fmt == Format::kJson) {
        Json j = header("classification");
        j["q"] = q;
        j["n"] = n;
        j["completely_basic"] = c.completely_basic;
        j["reason"] = c.reason ? Json(classify::to_string(*c.reason)) : Json(nullptr);
        j["m"] = classify::m_part(q, n);
        out << j.dump(2) << "\n";
      } else if (fmt == Format::kCsv) {
        out << "q,n,completely_basic,reason\n"
            << q << ',' << n << ',' << (c.completely_basic ? "true" : "false") << ','
            << (c.reason ? classify::to_string(*c.reason) : "") << "\n";
      } else {
        out << verdict << "\n";
      }
      if (cfg.explain)
        err << "completely basic iff for every prime r | n, r does not divide ord_{m_r}(q), where m_r is the part of "
               "n/r prime to the characteristic; here m = "
            << classify::m_part(q, n) << "\n";
      return kOk;
    }

    if (*bounds_cmd) {
      const auto id = bounds::condition_from_string(cond_name);
      if (!id) throw UsageError("unknown condition " + cond_name);
      const auto r = run_condition(*id, cond_args, reduction, cfg, w_mode, w_a);
      out << emit(r, fmt);
      if (cfg.explain) err << explain_condition(r);
      return verdict_exit(r.verdict());
    }

    if (*pipe_cmd) {
      const auto r = which == "thm1" ? bounds::pipeline_theorem1(cfg.thm1) : bounds::pipeline_theorem0(cfg.thm0);
      emit_pipeline(r);
      if (cfg.explain) {
        if (which == "thm1")
          err << "table1: n not prime or prime square where " << bounds::formula(ConditionId::kCond2)
              << " fails at q0; q1 is the least prime power where it holds\n"
              << "region: prime powers q0 <= q < q1; cond3_c16: " << bounds::formula(ConditionId::kCond3C16)
              << " fails; cond3_exact: " << bounds::formula(ConditionId::kCond3ExactW)
              << " fails; not_completely_basic: classifier rejects\n"
              << "robin_violations: " << bounds::formula(ConditionId::kCond2Robin) << " fails at q = n+2\n";
        else
          err << "p_odd: " << bounds::formula(ConditionId::kCond2POdd) << "\n  reduction: "
              << bounds::formula(ConditionId::kCond2POdd, true) << "\np2: " << bounds::formula(ConditionId::kCond3P2)
              << "\n  reduction: " << bounds::formula(ConditionId::kCond3P2, true)
              << "\na12: " << bounds::formula(ConditionId::kCondA12) << "\n  reduction: "
              << bounds::formula(ConditionId::kCondA12, true) << "\n  final filter: m does not divide q-1, then "
              << bounds::formula(ConditionId::kIpPcn2) << "\n";
      }
      return kOk;
    }

    if (*count_cmd) {
      checked_prime_power(q);
      search::CountOptions opt;
      opt.cap = cfg.enumeration_cap;
      opt.budget = cfg.factoring_budget;
      opt.threads = cfg.threads;
      const auto c = search::count_cn_pcn(q, n, opt);
      if (fmt == Format::kJson) {
        Json j = header("counts");
        j["q"] = c.q;
        j["n"] = c.n;
        j["size"] = c.size;
        j["primitive"] = c.primitive;
        Json no = Json::array();
        for (auto [l, k] : c.normal_over) no.push_back(Json{{"l", l}, {"count", k}});
        j["normal_over"] = no;
        j["cn"] = c.cn;
        j["pcn"] = c.pcn;
        out << j.dump(2) << "\n";
      } else if (fmt == Format::kCsv) {
        out << "q,n,size,primitive,cn,pcn\n"
            << c.q << ',' << c.n << ',' << c.size << ',' << c.primitive << ',' << c.cn << ',' << c.pcn << "\n";
      } else {
        out << "F_" << q << "^" << n << ": " << c.size << " elements\n  primitive " << c.primitive << "\n";
        for (auto [l, k] : c.normal_over) out << "  normal over F_" << q << "^" << l << " " << k << "\n";
        out << "  completely normal " << c.cn << "\n  primitive completely normal " << c.pcn << "\n";
      }
      if (cfg.explain)
        err << "exhaustive enumeration; normal over F_{q^l} tested as gcd(X^(n/l) - 1, sum x^(q^(li)) X^i) = 1\n";
      return kOk;
    }

    if (*search_cmd) {
      checked_prime_power(q);
      search::SearchOptions opt;
      opt.strategy = strategy == "random" ? search::Strategy::kRandom : search::Strategy::kExhaustive;
      opt.seed = cfg.random_seed;
      opt.max_trials = cfg.max_trials;
      opt.budget = cfg.factoring_budget;
      try {
        const auto cert = search::find_pcn(q, n, opt);
        out << (fmt == Format::kText ? emit_certificate_text(cert) : search::to_json(cert) + "\n");
      } catch (const search::SearchExhausted& ex) {
        err << ex.what() << "\n";
        return kError;
      }
      if (cfg.explain)
        err << "primitive: x^((q^n-1)/r) != 1 for each prime r | q^n-1; completely normal: normal over F_{q^l} "
               "for every proper divisor l of n\n";
      return kOk;
    }

    if (*verify_cmd) {
      std::ifstream in(cert_file);
      if (!in) throw std::runtime_error("cannot read " + cert_file);
      std::stringstream buf;
      buf << in.rdbuf();
      const auto cert = search::certificate_from_json(buf.str());
      const auto v = search::verify_certificate(cert);
      if (fmt == Format::kJson) {
        Json j = header("verification");
        j["ok"] = v.ok;
        j["reason"] = v.reason;
        out << j.dump(2) << "\n";
      } else if (fmt == Format::kCsv) {
        out << "ok,reason\n" << (v.ok ? "true" : "false") << ',' << v.reason << "\n";
      } else {
        out << (v.ok ? "valid" : "invalid: " + v.reason) << "\n";
      }
      if (cfg.explain)
        err << "field rebuilt from the modulus; order factorization re-multiplied and primality rechecked; every "
               "primitivity and normality check re-run\n";
      return v.ok ? kOk : kFails;
    }

    if (*chars_cmd) {
      if (!arith::is_prime_u64(p)) throw UsageError("p must be prime");
      const auto r = chars::self_test(static_cast<std::uint32_t>(p), static_cast<unsigned>(e), static_cast<unsigned>(n));
      const Json j = self_test_json(r);
      if (fmt == Format::kJson) {
        out << j.dump(2) << "\n";
      } else if (fmt == Format::kCsv) {
        out << "p,e,n,passed,orth_mult,orth_add,gauss_rel,omega_dev,Omega_dev,order_count_mismatches\n"
            << r.p << ',' << r.e << ',' << r.n << ',' << (r.passed() ? "true" : "false") << ',' << r.orth_mult << ','
            << r.orth_add << ',' << r.gauss_rel << ',' << r.omega_dev << ',' << r.Omega_dev << ','
            << r.order_count_mismatches << "\n";
      } else {
        out << (r.passed() ? "PASS" : "FAIL") << " F_" << p << "^" << e * n << " (n = " << n << ")\n";
        for (const auto& [k, v] : j.items())
          if (v.is_object()) out << "  " << k << " " << v.dump() << "\n";
      }
      if (cfg.explain)
        err << "orthogonality sums within 1e-9 |group|; |Gauss sum| = q^(n/2) within 1e-6 relative; omega and "
               "Omega_l equal the primitivity and normality indicators within 1e-9; additive characters of each "
               "order F number phi_l(F)\n";
      return r.passed() ? kOk : kFails;
    }

    if (*table1_cmd) {
      PipelineResult r{"table1", {bounds::table1(cfg.thm1)}, {}};
      if (fmt == Format::kCsv) out << csv_stage(r.stages[0]);
      else out << emit(r, fmt);
      if (cfg.explain) err << "rows where " << bounds::formula(ConditionId::kCond2) << " fails at q0\n";
      return kOk;
    }

    if (*table2_cmd) {
      const auto r = bounds::table2(bounds::pipeline_theorem1(cfg.thm1), bounds::pipeline_theorem0(cfg.thm0));
      if (fmt == Format::kCsv) out << csv_stage(r.stages[0]);
      else out << emit(r, fmt);
      if (cfg.explain) err << "union of the survivors of both pipelines as (n, q) with n = p^l m, duplicates removed\n";
      return kOk;
    }
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n";
    return kError;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace pcnlab::cli
