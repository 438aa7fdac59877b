#pragma once

#include <array>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "qhopf/presets.hpp"

namespace qhopf::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kAllPass = 0, kCheckFailure = 1, kFalsification = 2, kConfigError = 3 };

/// Every suite name accepted by --suite, in execution order.
const std::vector<std::string>& suite_names();

struct SuiteConfig {
  std::optional<PresetId> preset;
  std::string presentation_path;
  int order = kDefaultOrder;
  bool order_given = false;  // a presentation file's own order applies otherwise
  int n_max = -1;  // -1: order + 2
  std::vector<std::string> suites;
  std::uint64_t seed = 0;
  int corpus = 10;
  bool slow = false;
  bool timings = false;
  std::optional<std::array<int, 3>> lemma23_triple;  // r, t, s
  unsigned threads = 0;                              // 0: from QHOPF_THREADS or hardware

  int effective_n_max() const { return n_max > 0 ? n_max : order + 2; }
  unsigned effective_threads() const;
};

/// Loads the preset or presentation file named by the config; throws on
/// configuration problems (missing file, invalid presentation).
Preset load_context(const SuiteConfig& cfg);

struct Record {
  std::string suite;
  std::string name;
  std::string reference;          // which statement the check exercises
  std::string verdict;            // pass | fail | error
  std::optional<int> residual_valuation;
  std::string counterexample;     // element grammar
  std::string detail;
  bool falsification = false;
  double wall_ms = 0;
};

struct RunResult {
  nlohmann::ordered_json report;
  std::vector<Record> records;
  int exit_code = kAllPass;
};

/// Runs the selected suites. Configuration errors raised while loading are
/// propagated; errors inside a suite become "error" records.
RunResult run_suite(const SuiteConfig& cfg);

/// Applies one desk-check operation to an expression. `args` are the
/// operation's positional arguments (subset and/or expression); returns the
/// text to print and sets `exit_code` (gate: 1 on a failing certificate).
std::string eval_expr(const SuiteConfig& cfg, const std::string& op, const std::vector<std::string>& args,
                      int& exit_code);

/// Operation names accepted by eval_expr.
const std::vector<std::string>& eval_operations();

}  // namespace qhopf::cli
