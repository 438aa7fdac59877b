#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "qhopf/error.hpp"
#include "qhopf/parse.hpp"

namespace qhopf::cli {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"hopf-axioms", "moebius", "lemma23",      "qt-axioms", "prop21",
                                                 "prop22",      "drinfeld-gate", "prop24", "braided"};
  return names;
}

const std::vector<std::string>& eval_operations() {
  static const std::vector<std::string> ops = {"coproduct", "delta-upper", "delta-lower",
                                               "delta-n",   "twisted-coproduct", "gate", "ad-r"};
  return ops;
}

unsigned SuiteConfig::effective_threads() const {
  if (threads > 0) return threads;
  if (const char* env = std::getenv("QHOPF_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Preset load_context(const SuiteConfig& cfg) {
  if (!cfg.presentation_path.empty()) {
    std::ifstream in(cfg.presentation_path);
    if (!in) throw Error("cannot read presentation file '" + cfg.presentation_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    Preset p = validate_presentation(
        parse_presentation_json(buf.str(), cfg.order_given ? std::optional<int>(cfg.order) : std::nullopt),
        cfg.presentation_path);
    p.descriptor.order = p.presentation->order();
    return p;
  }
  return build_preset({cfg.preset.value_or(PresetId::abelian), cfg.order, 2});
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Runs fn(0..n-1) with at most `threads` tasks in flight; results keep index order.
template <class F>
auto parallel_map(std::size_t n, unsigned threads, F fn) -> std::vector<decltype(fn(std::size_t{0}))> {
  using R = decltype(fn(std::size_t{0}));
  std::vector<R> out;
  out.reserve(n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(fn(i));
    return out;
  }
  for (std::size_t start = 0; start < n; start += threads) {
    std::vector<std::future<R>> wave;
    for (std::size_t i = start; i < std::min(n, start + threads); ++i)
      wave.push_back(std::async(std::launch::async, fn, i));
    for (auto& f : wave) out.push_back(f.get());
  }
  return out;
}

TensorElement random_element(const AlgebraPtr& alg, int legs, std::mt19937_64& rng, int nterms, int max_deg) {
  const int N = alg->order();
  const int ng = alg->ngens();
  TensorElement out(alg, legs);
  for (int t = 0; t < nterms; ++t) {
    ExponentKey key(legs * ng, 0);
    for (int l = 0; l < legs; ++l) {
      const int deg = static_cast<int>(rng() % (max_deg + 1));
      for (int d = 0; d < deg; ++d) key[l * ng + rng() % ng]++;
    }
    const long c = static_cast<long>(rng() % 7) - 3;
    const int k = static_cast<int>(rng() % 2);
    if (c != 0) out.add_term(std::move(key), TruncScalar::monomial(c, k, N));
  }
  return out;
}

std::string context_label(const HopfContext& ctx) { return ctx.width() == 1 ? "[H]" : "[H#H]"; }

class Runner {
 public:
  Runner(const SuiteConfig& cfg, const Preset& preset)
      : cfg_(cfg),
        preset_(preset),
        base_(HopfContext::base(preset.presentation)),
        square_(HopfContext::tensor_square(preset.presentation)),
        threads_(cfg.effective_threads()) {}

  std::vector<Record> run(const std::string& suite) {
    records_.clear();
    suite_ = suite;
    try {
      if (suite == "hopf-axioms") hopf_axioms();
      else if (suite == "moebius") moebius();
      else if (suite == "lemma23") lemma23();
      else if (suite == "qt-axioms") qt_axioms();
      else if (suite == "prop21") r_sigma_identity();
      else if (suite == "prop22") truncated_expansion();
      else if (suite == "drinfeld-gate") gate();
      else if (suite == "prop24") adjoint_stability();
      else if (suite == "braided") braided();
    } catch (const std::exception& e) {
      Record r;
      r.name = suite + " aborted";
      r.reference = "-";
      r.verdict = "error";
      r.detail = e.what();
      push(std::move(r));
    }
    return records_;
  }

 private:
  int order() const { return preset_.presentation->order(); }

  const QTContext& qt() const {
    if (!preset_.qt) throw Error("this suite needs an R-matrix; the presentation has none");
    return *preset_.qt;
  }

  void push(Record r) {
    r.suite = suite_;
    records_.push_back(std::move(r));
  }

  void push(const std::string& name, const std::string& ref, bool passed, std::optional<int> residual,
            const std::string& counterexample = {}, const std::string& detail = {}, double wall = 0) {
    Record r;
    r.name = name;
    r.reference = ref;
    r.verdict = passed ? "pass" : "fail";
    r.residual_valuation = residual;
    r.counterexample = counterexample;
    r.detail = detail;
    r.wall_ms = wall;
    push(std::move(r));
  }

  // Folds per-element check records into one record.
  void push_merged(const std::string& name, const std::string& ref, const std::vector<CheckRecord>& recs,
                   const std::string& detail, double wall) {
    bool passed = true;
    int residual = order() + 1;
    std::string ce;
    for (const auto& r : recs) {
      residual = std::min(residual, r.residual_valuation);
      if (!r.passed && passed) {
        passed = false;
        ce = r.counterexample;
      }
    }
    push(name, ref, passed, residual, ce, detail, wall);
  }

  std::vector<TensorElement> random_corpus(const HopfContext& ctx, int count, std::uint64_t salt) {
    std::mt19937_64 rng(cfg_.seed * 1000003u + salt);
    std::vector<TensorElement> out;
    for (int i = 0; i < count; ++i)
      out.push_back(random_element(ctx.algebra(), ctx.width(), rng, ctx.width() == 1 ? 3 : 2, 2));
    return out;
  }

  std::vector<GateCertificate> certified(const HopfContext& ctx, std::uint64_t salt) {
    CorpusOptions opt;
    opt.max_degree = 3;
    opt.limit = cfg_.slow ? 0 : static_cast<std::size_t>(cfg_.corpus);
    opt.random_combinations = std::max(2, cfg_.corpus / 3);
    opt.seed = cfg_.seed * 1000003u + salt;
    return certified_corpus(ctx, cfg_.effective_n_max(), opt);
  }

  void hopf_axioms() {
    for (const HopfContext* ctx : {&base_, &square_}) {
      const auto t0 = Clock::now();
      const AxiomReport rep = hopf_axioms_check(*ctx, random_corpus(*ctx, 3, 11 + ctx->width()));
      const double wall = ms_since(t0);
      for (const auto& axiom : rep.checked) {
        int residual = order() + 1;
        std::string ce;
        for (const auto& f : rep.failures)
          if (f.axiom == axiom) {
            if (ce.empty()) ce = f.element;
            residual = std::min(residual, f.residual_valuation);
          }
        push(axiom + " " + context_label(*ctx), "hopf-structure", ce.empty(), residual, ce,
             "generators, their pairwise products and sample elements", wall);
      }
    }
  }

  void moebius() {
    const int kmax = 4;
    for (const HopfContext* ctx : {&base_, &square_}) {
      const auto corpus = random_corpus(*ctx, cfg_.corpus, 21 + ctx->width());
      for (const SubsetIndex& sigma : subsets(kmax)) {
        const auto t0 = Clock::now();
        auto recs = parallel_map(corpus.size(), threads_, [&](std::size_t i) {
          const MoebiusResult m = moebius_reconstruct(*ctx, corpus[i], sigma);
          CheckRecord r;
          r.passed = m.equal;
          r.residual_valuation = (m.reconstruction - m.direct).valuation();
          if (!m.equal) r.counterexample = corpus[i].str();
          return r;
        });
        push_merged("D_S = sum_{S' <= S} delta_S' S=" + sigma.str() + " " + context_label(*ctx),
                    "moebius-inversion", recs, std::to_string(corpus.size()) + " seeded elements", ms_since(t0));
      }
      for (int n = 1; n <= kmax; ++n) {
        const auto t0 = Clock::now();
        auto recs = parallel_map(corpus.size(), threads_, [&](std::size_t i) {
          const TensorElement by_subsets = delta_lower(*ctx, corpus[i], SubsetIndex::full(n));
          const TensorElement by_mask = delta_n(*ctx, corpus[i], n);
          const TensorElement reduced = reduced_coproduct(*ctx, corpus[i], n);
          CheckRecord r;
          r.residual_valuation = std::min((by_subsets - by_mask).valuation(), (by_subsets - reduced).valuation());
          r.passed = by_subsets == by_mask && by_subsets == reduced;
          if (!r.passed) r.counterexample = corpus[i].str();
          return r;
        });
        push_merged("delta_{1..n} = delta_n = (id - e)^n D^n n=" + std::to_string(n) + " " + context_label(*ctx),
                    "delta-consistency", recs, std::to_string(corpus.size()) + " seeded elements", ms_since(t0));
      }
    }
  }

  void lemma23() {
    auto one = [&](int r, int t, int s) {
      const auto res = verify_binomial_identities(r, t, s);
      std::ostringstream d;
      d << "(a) sum_d (-1)^d C(d-1, r) C(t, d) = " << res.sum_a.get_str() << ", expected " << res.expected_a.get_str()
        << "; (b) sum_d (-1)^d C(d+s, r) C(t, d) = " << res.sum_b.get_str() << ", expected 0"
        << "; C(u, v) = u choose v, written C_u^v in upper-index notation";
      return std::make_pair(res.passed(), d.str());
    };
    if (cfg_.lemma23_triple) {
      const auto [r, t, s] = *cfg_.lemma23_triple;
      const auto [ok, detail] = one(r, t, s);
      push("binomial identities r=" + std::to_string(r) + " t=" + std::to_string(t) + " s=" + std::to_string(s),
           "binomial-identities", ok, std::nullopt, {}, detail);
      return;
    }
    for (int t = 1; t <= 8; ++t)
      for (int r = 0; r < t; ++r) {
        bool ok = true;
        std::string first_bad;
        for (int s = 0; s <= 8; ++s) {
          const auto [pass, detail] = one(r, t, s);
          if (!pass && ok) {
            ok = false;
            first_bad = "s=" + std::to_string(s) + ": " + detail;
          }
        }
        push("binomial identities r=" + std::to_string(r) + " t=" + std::to_string(t) + " s=0..8",
             "binomial-identities", ok, std::nullopt, {}, ok ? "exact integer sums" : first_bad);
      }
  }

  void qt_axioms() {
    const QTContext& q = qt();
    const std::size_t want = static_cast<std::size_t>(std::max(20, cfg_.corpus));
    std::vector<TensorElement> test_set;
    for (const auto& c : certified_corpus(base_, 1, {3, want, 0, cfg_.seed})) test_set.push_back(c.subject);
    const auto extra = random_corpus(base_, static_cast<int>(want - std::min(want, test_set.size())), 31);
    test_set.insert(test_set.end(), extra.begin(), extra.end());

    const auto t0 = Clock::now();
    const VerdictReport rep = qt_axioms_check(q, test_set);
    const double wall = ms_since(t0);
    std::vector<CheckRecord> axiom1(rep.records.begin(), rep.records.begin() + test_set.size());
    push_merged("R D(a) R^-1 = D^op(a)", "quasitriangularity", axiom1,
                std::to_string(test_set.size()) + " elements of H", wall);
    for (std::size_t i = test_set.size(); i < rep.records.size(); ++i) {
      const auto& r = rep.records[i];
      push(r.name, r.name.find("R12 R13") == 0 ? "yang-baxter" : "quasitriangularity", r.passed,
           r.residual_valuation, r.counterexample, {}, wall);
    }

    const auto t1 = Clock::now();
    const auto sample = random_corpus(square_, 5, 32);
    std::vector<CheckRecord> routes;
    for (const auto& a : sample) {
      CheckRecord r;
      const TensorElement diff = twisted_coproduct(q, a) - square_.coproduct(a);
      r.passed = diff.is_zero();
      r.residual_valuation = diff.valuation();
      if (!r.passed) r.counterexample = a.str();
      routes.push_back(r);
    }
    push_merged("twisted coproduct: s_23 (D # id # id)(id # D) = tensor-square context", "twisted-coproduct",
                routes, "5 seeded elements of H#H", ms_since(t1));
  }

  void r_sigma_identity() {
    const QTContext& q = qt();
    for (int n = 1; n <= 3; ++n) {
      const auto t0 = Clock::now();
      const VerdictReport rep = verify_r_sigma_identity(q, n);
      const double wall = ms_since(t0);
      for (const auto& r : rep.records)
        push(r.name, "r-sigma-identity", r.passed, r.residual_valuation, r.counterexample, {}, wall);
    }
  }

  void truncated_expansion() {
    const QTContext& q = qt();
    const auto corpus = certified(square_, 41);
    for (const SubsetIndex& sigma : subsets(3)) {
      for (int i = 0; i < sigma.size(); ++i) {
        const auto t0 = Clock::now();
        auto recs = parallel_map(corpus.size(), threads_,
                                 [&](std::size_t k) { return verify_truncated_expansion(q, corpus[k], sigma, i); });
        push_merged("expansion S=" + sigma.str() + " i=" + std::to_string(i), "truncated-expansion", recs,
                    "required valuation >= " + std::to_string(std::min(i + 1, order() + 1)) + " on " +
                        std::to_string(corpus.size()) + " certified elements",
                    ms_since(t0));
      }
    }
  }

  static std::string valuations_text(const GateCertificate& c) {
    std::string s = "valuations";
    for (int v : c.valuations) s += " " + std::to_string(v);
    return s;
  }

  void gate() {
    const int n_max = cfg_.effective_n_max();
    for (const HopfContext* ctx : {&base_, &square_}) {
      const auto t0 = Clock::now();
      CorpusOptions opt{3, 0, 0, cfg_.seed};
      const auto certs = certified_corpus(*ctx, 1, opt);
      auto recs = parallel_map(certs.size(), threads_, [&](std::size_t i) {
        const GateCertificate c = drinfeld_gate(*ctx, certs[i].subject, n_max);
        CheckRecord r;
        r.passed = c.passed();
        r.residual_valuation = c.passed() ? order() + 1 : c.failures.front().valuation;
        if (!r.passed) r.counterexample = c.subject.str();
        return r;
      });
      push_merged("gate accepts h^d m, deg m = d <= 3 " + context_label(*ctx), "membership-gate", recs,
                  std::to_string(certs.size()) + " scaled monomials, n <= " + std::to_string(n_max), ms_since(t0));
    }
    const AlgebraPtr& alg = base_.algebra();
    const int N = order();
    // negative controls
    {
      TensorElement g1(alg, 2);
      ExponentKey k(2 * alg->ngens(), 0);
      k[0] = 1;
      g1.add_term(k, TruncScalar::one(N));
      const auto c = drinfeld_gate(square_, g1, n_max);
      const bool rejected = !c.passed() && c.failures.front().n == 1 && c.failures.front().valuation == 0;
      push("gate rejects " + g1.str() + " at n=1 [H#H]", "membership-gate", rejected,
           c.passed() ? N + 1 : c.failures.front().valuation, rejected ? "" : g1.str(), valuations_text(c));
    }
    if (alg->ngens() >= 2) {
      const TensorElement a = TensorElement::generator(alg, 0) * TensorElement::generator(alg, 1) *
                              TruncScalar::monomial(1, 1, N);
      const auto c = drinfeld_gate(base_, a, n_max);
      const bool rejected = !c.passed() && c.failures.front().n == 2 && c.failures.front().valuation == 1;
      push("gate rejects " + a.str() + " at n=2 [H]", "membership-gate", rejected,
           c.passed() ? N + 1 : c.failures.front().valuation, rejected ? "" : a.str(), valuations_text(c));
    }
  }

  void adjoint_stability() {
    const QTContext& q = qt();
    const auto corpus = certified(square_, 51);
    auto results = parallel_map(corpus.size(), threads_, [&](std::size_t i) {
      const auto s0 = Clock::now();
      StabilityResult s = verify_adjoint_stability(q, corpus[i]);
      return std::make_pair(std::move(s), ms_since(s0));
    });
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& [s, wall] = results[i];
      Record r;
      r.name = "R a R^-1 in (H#H)' for a = " + corpus[i].subject.str();
      r.reference = "adjoint-stability";
      r.verdict = s.falsified() ? "fail" : "pass";
      r.falsification = s.falsified();
      r.residual_valuation = s.falsified() ? s.image.failures.front().valuation : order() + 1;
      r.detail = valuations_text(s.image) + " for n = 1.." + std::to_string(s.image.n_max);
      if (s.falsified()) {
        r.counterexample = corpus[i].subject.str();
        r.detail += "; image " + s.image.subject.str();
      }
      r.wall_ms = wall;
      push(std::move(r));
    }
  }

  void braided() {
    const QTContext& q = qt();
    const auto t0 = Clock::now();
    CorpusOptions o1{3, cfg_.slow ? 0 : static_cast<std::size_t>(cfg_.corpus), 0, cfg_.seed * 1000003u + 61};
    const auto h1 = certified_corpus(base_, cfg_.effective_n_max(), o1);
    const auto h2 = certified(square_, 62);
    const BraidOperatorReport rep = braided_axioms_check(q, h1, h2);
    const double wall = ms_since(t0);
    std::map<std::string, std::vector<CheckRecord>> by_axiom;
    std::vector<std::string> order_seen;
    for (const auto& r : rep.axioms.records) {
      if (!by_axiom.count(r.name)) order_seen.push_back(r.name);
      by_axiom[r.name].push_back(r);
    }
    for (const auto& name : order_seen)
      push_merged(name, "braided-structure", by_axiom[name],
                  std::to_string(by_axiom[name].size()) + " certified test elements", wall);
    push("R differs from the flip", "braided-structure", rep.differs_from_flip, order() + 1, {},
         rep.sigma_witness ? "witness " + *rep.sigma_witness : "no witness among tested elements", wall);
  }

  const SuiteConfig& cfg_;
  const Preset& preset_;
  HopfContext base_;
  HopfContext square_;
  unsigned threads_;
  std::string suite_;
  std::vector<Record> records_;
};

nlohmann::ordered_json to_json(const Record& r, bool timings) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["name"] = r.name;
  j["reference"] = r.reference;
  j["verdict"] = r.verdict;
  if (r.residual_valuation)
    j["residual_valuation"] = *r.residual_valuation;
  else
    j["residual_valuation"] = nullptr;
  j["counterexample"] = r.counterexample;
  j["detail"] = r.detail;
  j["falsification"] = r.falsification;
  if (timings) j["wall_ms"] = r.wall_ms;
  return j;
}

}  // namespace

RunResult run_suite(const SuiteConfig& requested) {
  SuiteConfig cfg = requested;
  const Preset preset = load_context(cfg);
  cfg.order = preset.presentation->order();
  std::vector<std::string> selected = cfg.suites;
  if (selected.empty() || std::find(selected.begin(), selected.end(), "all") != selected.end())
    selected = suite_names();
  for (const auto& s : selected)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw Error("unknown suite '" + s + "'");

  RunResult out;
  Runner runner(cfg, preset);
  for (const auto& s : suite_names()) {
    if (std::find(selected.begin(), selected.end(), s) == selected.end()) continue;
    auto recs = runner.run(s);
    out.records.insert(out.records.end(), recs.begin(), recs.end());
  }

  int passed = 0, failed = 0, errors = 0, falsifications = 0;
  for (const auto& r : out.records) {
    if (r.verdict == "pass") ++passed;
    else if (r.verdict == "fail") ++failed;
    else ++errors;
    if (r.falsification) ++falsifications;
  }
  out.exit_code = errors ? kConfigError : falsifications ? kFalsification : failed ? kCheckFailure : kAllPass;

  auto& j = out.report;
  j["artifact"] = {{"name", "qhopf"}, {"version", kVersion}};
  nlohmann::ordered_json c;
  if (cfg.presentation_path.empty())
    c["preset"] = to_string(cfg.preset.value_or(PresetId::abelian));
  else
    c["presentation"] = cfg.presentation_path;
  c["order"] = cfg.order;
  c["n_max"] = cfg.effective_n_max();
  c["suites"] = selected;
  c["seed"] = cfg.seed;
  c["corpus"] = cfg.corpus;
  c["slow"] = cfg.slow;
  if (cfg.lemma23_triple) c["lemma23_triple"] = *cfg.lemma23_triple;
  j["config"] = c;
  j["gate_semantics"] =
      "membership test valuation(delta_n(a)) >= min(n, N+1) for 1 <= n <= n_max; a pass certifies membership "
      "at truncation order N only";
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : out.records) j["records"].push_back(to_json(r, cfg.timings));
  j["summary"] = {{"checks", out.records.size()},
                  {"passed", passed},
                  {"failed", failed},
                  {"errors", errors},
                  {"falsifications", falsifications}};
  j["exit_code"] = out.exit_code;
  return out;
}

namespace {

TensorElement parse_any_width(const std::string& text, const AlgebraPtr& alg) {
  try {
    return parse_element(text, alg, 1);
  } catch (const UnknownGenerator&) {
    throw;
  } catch (const ParseError& first) {
    try {
      return parse_element(text, alg, 2);
    } catch (const ParseError&) {
      throw first;
    }
  }
}

const HopfContext& context_for(const TensorElement& a, const HopfContext& base, const HopfContext& square) {
  if (a.arity() == 1) return base;
  if (a.arity() == 2) return square;
  throw ArityMismatch("expressions must live in H or H # H");
}

void need_args(const std::string& op, const std::vector<std::string>& args, std::size_t n) {
  if (args.size() != n)
    throw Error(op + " takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s") + ", got " +
                std::to_string(args.size()));
}

}  // namespace

std::string eval_expr(const SuiteConfig& requested, const std::string& op, const std::vector<std::string>& args,
                      int& exit_code) {
  exit_code = kAllPass;
  SuiteConfig cfg = requested;
  const Preset preset = load_context(cfg);
  cfg.order = preset.presentation->order();
  const HopfContext base = HopfContext::base(preset.presentation);
  const HopfContext square = HopfContext::tensor_square(preset.presentation);
  const AlgebraPtr& alg = base.algebra();
  auto require_qt = [&]() -> const QTContext& {
    if (!preset.qt) throw Error(op + " needs an R-matrix");
    return *preset.qt;
  };

  if (op == "coproduct") {
    need_args(op, args, 1);
    const TensorElement a = parse_any_width(args[0], alg);
    return print_element(context_for(a, base, square).coproduct(a));
  }
  if (op == "delta-upper" || op == "delta-lower") {
    need_args(op, args, 2);
    const SubsetIndex sigma = SubsetIndex::parse(args[0]);
    const TensorElement a = parse_any_width(args[1], alg);
    const HopfContext& ctx = context_for(a, base, square);
    return print_element(op == "delta-upper" ? delta_upper(ctx, a, sigma) : delta_lower(ctx, a, sigma));
  }
  if (op == "delta-n") {
    need_args(op, args, 2);
    const int n = std::stoi(args[0]);
    const TensorElement a = parse_any_width(args[1], alg);
    return print_element(delta_n(context_for(a, base, square), a, n));
  }
  if (op == "twisted-coproduct") {
    need_args(op, args, 1);
    return print_element(twisted_coproduct(require_qt(), parse_element(args[0], alg, 2)));
  }
  if (op == "ad-r") {
    need_args(op, args, 1);
    return print_element(ad_r(require_qt(), parse_element(args[0], alg, 2)));
  }
  if (op == "gate") {
    need_args(op, args, 1);
    const TensorElement a = parse_any_width(args[0], alg);
    const GateCertificate c = drinfeld_gate(context_for(a, base, square), a, cfg.effective_n_max());
    std::ostringstream out;
    out << "subject: " << print_element(c.subject) << "\n";
    out << "context: " << (c.width == 1 ? "H" : "H # H") << "\n";
    out << "order: " << c.order << "\n";
    out << "n_max: " << c.n_max << "\n";
    out << "valuations:";
    for (int v : c.valuations) out << " " << v;
    out << "\n";
    for (const auto& f : c.failures)
      out << "failure: n=" << f.n << " valuation " << f.valuation << " < " << f.required << "\n";
    out << "verdict: " << (c.passed() ? "pass" : "fail") << " (order-" << c.order << " certificate)";
    if (!c.passed()) exit_code = kCheckFailure;
    return out.str();
  }
  throw Error("unknown operation '" + op + "'");
}

}  // namespace qhopf::cli
