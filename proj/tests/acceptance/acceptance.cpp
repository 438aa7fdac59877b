// Acceptance suite: one PASS/FAIL line per criterion. Every tolerance is exact
// (rational arithmetic, valuation thresholds); the runtime budget is printed
// next to the measured time and counts toward the verdict.
//
//   qhopf_acceptance <path-to-qhopf-binary>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "qhopf/parse.hpp"
#include "test_support.hpp"

using namespace qhopf;
using qhopf::testing::qt;
using qhopf::testing::random_element;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (note.size() < 400) note += (note.empty() ? "" : "; ") + what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > budget_s) o.require(false, "over time budget");
  if (!o.ok) ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", s, budget_s);
  std::cout << (o.ok ? "PASS" : "FAIL") << "  [" << id << "] " << title << "  (" << timing << ")";
  if (!o.note.empty()) std::cout << "  " << o.note;
  std::cout << std::endl;
}

std::vector<TensorElement> seeded_corpus(const HopfContext& ctx, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<TensorElement> out;
  while (out.size() < count) {
    TensorElement a = random_element(ctx.algebra(), ctx.width(), rng, 3, 2, 0);
    if (!a.is_zero()) out.push_back(std::move(a));
  }
  return out;
}

std::vector<GateCertificate> certified(const HopfContext& ctx, int n_max, std::size_t limit, int mixes,
                                       std::uint64_t seed) {
  return certified_corpus(ctx, n_max, {3, limit, mixes, seed});
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string qhopf_bin = argc > 1 ? argv[1] : "";
  const auto& ab4 = qt(PresetId::abelian, 4);

  criterion(1, "Moebius inversion, abelian N=4, 25 elements, all S <= {1..4}, H and H#H, exact", 30, [&] {
    Outcome o;
    for (const HopfContext* ctx : {&ab4.hopf(), &ab4.twisted()}) {
      const auto corpus = seeded_corpus(*ctx, 25, 7 + ctx->width());
      for (const auto& sigma : subsets(4))
        for (const auto& a : corpus) {
          const MoebiusResult m = moebius_reconstruct(*ctx, a, sigma);
          o.require(m.equal && m.reconstruction == m.direct, "S=" + sigma.str() + " a=" + a.str());
        }
    }
    return o;
  });

  criterion(2, "delta_{1..n} = delta_n for n <= 4 on the same corpus, exact", 10, [&] {
    Outcome o;
    for (const HopfContext* ctx : {&ab4.hopf(), &ab4.twisted()}) {
      const auto corpus = seeded_corpus(*ctx, 25, 7 + ctx->width());
      for (int n = 1; n <= 4; ++n)
        for (const auto& a : corpus)
          o.require(delta_lower(*ctx, a, SubsetIndex::full(n)) == delta_n(*ctx, a, n),
                    "n=" + std::to_string(n) + " a=" + a.str());
    }
    return o;
  });

  criterion(3, "binomial identities (a), (b) for all 0 <= r < t <= 8, 0 <= s <= 8, exact integers", 1, [] {
    Outcome o;
    int count = 0;
    for (int t = 1; t <= 8; ++t)
      for (int r = 0; r < t; ++r)
        for (int s = 0; s <= 8; ++s, ++count) {
          const auto res = verify_binomial_identities(r, t, s);
          o.require(res.passed(), "r,t,s=" + std::to_string(r) + "," + std::to_string(t) + "," + std::to_string(s));
        }
    o.require(count == 36 * 9, "triple count");
    return o;
  });

  criterion(4, "quasitriangularity + YBE: abelian N=4, qsl2 N=3, 20-element axiom-1 corpus, mod h^{N+1}", 120, [] {
    Outcome o;
    for (auto [id, N] : {std::pair{PresetId::abelian, 4}, {PresetId::qsl2, 3}}) {
      const auto& q = qt(id, N);
      const auto corpus = seeded_corpus(q.hopf(), 20, 44);
      const VerdictReport rep = qt_axioms_check(q, corpus);
      o.require(rep.passed(), to_string(id));
      bool saw_ybe = false;
      for (const auto& r : rep.records)
        if (r.name.find("R12 R13 R23") != std::string::npos) saw_ybe = true;
      o.require(saw_ybe, to_string(id) + ": no YBE record");
    }
    return o;
  });

  criterion(5, "twisted D_S(R) = R_S for all S <= {1..n}, n = 1..3, qsl2 N=3 and abelian N=4, exact", 300, [] {
    Outcome o;
    for (auto [id, N] : {std::pair{PresetId::qsl2, 3}, {PresetId::abelian, 4}})
      for (int n = 1; n <= 3; ++n)
        o.require(verify_r_sigma_identity(qt(id, N), n).passed(), to_string(id) + " n=" + std::to_string(n));
    return o;
  });

  criterion(6, "truncated expansion residual valuation >= i+1, 10 certified elements, |S| <= 3, i < |S|", 120, [] {
    Outcome o;
    for (auto [id, N] : {std::pair{PresetId::qsl2, 3}, {PresetId::abelian, 4}}) {
      const auto& q = qt(id, N);
      const auto corpus = certified(q.twisted(), 3, 10, 0, 6);
      o.require(corpus.size() >= 10, to_string(id) + ": only " + std::to_string(corpus.size()) + " certified");
      for (const auto& c : corpus)
        for (const auto& sigma : subsets(3))
          for (int i = 0; i < sigma.size(); ++i) {
            const CheckRecord r = verify_truncated_expansion(q, c, sigma, i);
            o.require(r.passed && r.residual_valuation >= i + 1,
                      to_string(id) + " S=" + sigma.str() + " i=" + std::to_string(i) + " a=" + c.subject.str());
          }
    }
    return o;
  });

  criterion(7, "R a R^-1 in (H#H)': qsl2 N=4, >= 10 certified elements, val delta_n >= min(n,5), n <= 4; "
               "gate negative controls", 600, [] {
    Outcome o;
    const auto& q = qt(PresetId::qsl2, 4);
    const auto corpus = certified(q.twisted(), 4, 10, 3, 7);
    o.require(corpus.size() >= 10, "only " + std::to_string(corpus.size()) + " certified");
    for (const auto& c : corpus) {
      const StabilityResult s = verify_adjoint_stability(q, c);
      // independent threshold check on the image
      for (int n = 1; n <= 4; ++n)
        o.require(delta_n(q.twisted(), s.image.subject, n).valuation() >= std::min(n, 5) && !s.falsified(),
                  "a=" + c.subject.str() + " n=" + std::to_string(n));
    }
    const auto x1 = parse_element("E # 1", q.algebra(), 2);
    const auto neg1 = drinfeld_gate(q.twisted(), x1, 4);
    o.require(!neg1.passed() && neg1.valuations[0] == 0, "E # 1 not rejected at n=1");
    const auto& ab = qt(PresetId::abelian, 4);
    const auto hxy = parse_element("h * x*y", ab.algebra(), 1);
    const auto neg2 = drinfeld_gate(ab.hopf(), hxy, 4);
    o.require(!neg2.passed() && neg2.failures.front().n == 2 && neg2.valuations[1] == 1, "h*x*y not rejected at n=2");
    return o;
  });

  criterion(8, "braided axioms and operator YBE for Ad(R) on certified corpus, flip witness, abelian N=4 and qsl2 N=3",
            300, [] {
    Outcome o;
    for (auto [id, N] : {std::pair{PresetId::abelian, 4}, {PresetId::qsl2, 3}}) {
      const auto& q = qt(id, N);
      const auto h1 = certified(q.hopf(), N + 2, 10, 0, 8);
      const auto h2 = certified(q.twisted(), N + 2, 10, 0, 9);
      const BraidOperatorReport rep = braided_axioms_check(q, h1, h2);
      o.require(rep.axioms.passed(), to_string(id) + ": axiom failure");
      o.require(rep.differs_from_flip && rep.sigma_witness, to_string(id) + ": no witness");
      if (rep.sigma_witness) {
        const auto w = parse_element(*rep.sigma_witness, q.algebra(), 2);
        o.require(ad_r(q, w) != apply_flip(w, 1, 2), to_string(id) + ": witness does not separate R from the flip");
      }
    }
    return o;
  });

  criterion(9, "determinism: two runs of --suite all --seed 7 on abelian give identical reports, exit 0", 600,
            [&] {
    Outcome o;
    if (qhopf_bin.empty()) {
      o.require(false, "qhopf binary path not given");
      return o;
    }
    const auto dir = std::filesystem::temp_directory_path();
    const auto pid = std::to_string(static_cast<long>(std::chrono::steady_clock::now().time_since_epoch().count()));
    std::string reports[2];
    for (int k = 0; k < 2; ++k) {
      const std::string path = (dir / ("qhopf_det_" + pid + "_" + std::to_string(k) + ".json")).string();
      const std::string cmd =
          "\"" + qhopf_bin + "\" --preset abelian --suite all --seed 7 --report \"" + path + "\" > /dev/null";
      const int status = std::system(cmd.c_str());
      o.require(status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0,
                "run " + std::to_string(k) + " exit status " + std::to_string(status));
      reports[k] = slurp(path);
      std::filesystem::remove(path);
    }
    o.require(!reports[0].empty(), "empty report");
    o.require(reports[0] == reports[1], "reports differ");
    return o;
  });

  std::cout << (failures == 0 ? "all 9 criteria pass" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
