// qhopf: run verification suites on a quasitriangular Hopf algebra, or apply
// one operator to an expression.
//
//   qhopf --preset abelian --suite all --seed 7 --report out.json
//   qhopf --preset abelian delta-lower "{1,2}" "h^2 * x*y"
//   qhopf --preset qsl2 --nmax 4 gate "h * E # 1"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "qhopf/error.hpp"
#include "suites.hpp"

using namespace qhopf;
using namespace qhopf::cli;

namespace {

std::vector<std::string> split_commas(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::size_t start = 0;
    while (start <= item.size()) {
      const auto comma = item.find(',', start);
      const std::string part = item.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!part.empty()) out.push_back(part);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated h-adic verification of quasitriangular and braided Hopf algebra identities"};
  app.set_version_flag("--version", kVersion);
  app.fallthrough();
  app.require_subcommand(0, 1);

  SuiteConfig cfg;
  std::string preset_name = "abelian";
  std::vector<std::string> suites;
  std::string report_path;
  std::string triple_text;

  auto* preset_opt = app.add_option("--preset", preset_name, "built-in presentation")
                         ->check(CLI::IsMember({"trivial", "abelian", "qsl2"}));
  app.add_option("--presentation", cfg.presentation_path, "JSON presentation file (see docs/presentation-format.md)")
      ->excludes(preset_opt);
  auto* order_opt = app.add_option("--order", cfg.order, "truncation order N")->check(CLI::Range(1, 32));
  app.add_option("--nmax", cfg.n_max, "highest n tested by the membership gate (default N+2)")
      ->check(CLI::Range(1, 16));
  app.add_option("--suite", suites, "suites to run, comma separated, or 'all'")->delimiter(',');
  app.add_option("--seed", cfg.seed, "seed for random corpora");
  app.add_option("--corpus", cfg.corpus, "size of random and certified corpora")->check(CLI::Range(1, 100000));
  app.add_option("--report", report_path, "write the JSON report here ('-' for stdout)");
  app.add_flag("--slow", cfg.slow, "use every scaled basis monomial instead of a seeded sample");
  app.add_flag("--timings", cfg.timings, "include wall times in the report (breaks byte-identical reruns)");
  app.add_option("--lemma23-triple", triple_text, "check a single r,t,s triple in the lemma23 suite");

  std::vector<std::string> eval_args;
  std::map<std::string, CLI::App*> ops;
  const std::map<std::string, std::string> op_help = {
      {"coproduct", "EXPR: coproduct in H or in H # H (by arity)"},
      {"delta-upper", "SIGMA EXPR: D_Sigma"},
      {"delta-lower", "SIGMA EXPR: delta_Sigma"},
      {"delta-n", "N EXPR: delta_n by bitmask enumeration"},
      {"twisted-coproduct", "EXPR: s_23 (D # id # id)(id # D) of an element of H # H"},
      {"gate", "EXPR: membership gate certificate"},
      {"ad-r", "EXPR: R a R^-1 for a in H # H"}};
  for (const auto& op : eval_operations()) {
    CLI::App* sub = app.add_subcommand(op, op_help.at(op));
    sub->add_option("args", eval_args, "positional arguments")->required();
    ops[op] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    cfg.order_given = order_opt->count() > 0;
    if (cfg.presentation_path.empty()) cfg.preset = preset_from_string(preset_name);
    cfg.suites = split_commas(suites);
    if (!triple_text.empty()) {
      std::array<int, 3> t{};
      if (std::sscanf(triple_text.c_str(), "%d,%d,%d", &t[0], &t[1], &t[2]) != 3)
        throw Error("--lemma23-triple expects r,t,s");
      cfg.lemma23_triple = t;
    }

    for (const auto& [name, sub] : ops) {
      if (!sub->parsed()) continue;
      int code = kAllPass;
      std::cout << eval_expr(cfg, name, eval_args, code) << "\n";
      return code;
    }

    const RunResult result = run_suite(cfg);
    for (const auto& r : result.records) {
      std::cout << "[" << r.verdict << "] " << r.suite << ": " << r.name;
      if (r.verdict != "pass" && r.residual_valuation) std::cout << " (residual valuation " << *r.residual_valuation << ")";
      std::cout << "\n";
      if (r.verdict == "error") std::cerr << "error in " << r.suite << ": " << r.detail << "\n";
      if (r.falsification) std::cerr << "falsification: " << r.name << ": " << r.detail << "\n";
    }
    const auto& s = result.report["summary"];
    std::cout << s["checks"] << " checks: " << s["passed"] << " passed, " << s["failed"] << " failed, "
              << s["errors"] << " errors, " << s["falsifications"] << " falsifications\n";

    const std::string text = result.report.dump(2) + "\n";
    if (report_path == "-") {
      std::cout << text;
    } else if (!report_path.empty()) {
      std::ofstream out(report_path, std::ios::binary);
      if (!out) throw Error("cannot write report to '" + report_path + "'");
      out << text;
    }
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
}
