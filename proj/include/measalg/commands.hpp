#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "measalg/io.hpp"
#include "measalg/morphism.hpp"

namespace measalg::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kInputError = 2, kBudgetExceeded = 3 };

struct RunReport {
  std::string command;
  io::Json inputs = io::Json::array();  // [{"path", "sha256"}]
  io::Json results = io::Json::object();
  std::vector<LawViolation> violations;
  int exit_code = kOk;

  io::Json to_json() const;
  std::string to_text() const;
};

/// The three routes compared by theorem-check. Replaceable so mutation
/// tests can inject a faulty implementation.
struct TheoremOracles {
  std::function<CompressionResult(const MeasurableMap&)> compression = measalg::compression;
  std::function<CompressionResult(const MeasurableMap&)> lipschitz_fast = measalg::lipschitz_fast;
  std::function<BruteForceResult(const MeasurableMap&, std::size_t)> lipschitz_bruteforce =
      [](const MeasurableMap& map, std::size_t budget) {
        return measalg::lipschitz_bruteforce(map, budget);
      };
};

struct TheoremCheckOptions {
  std::optional<std::string> map_path;
  std::size_t budget = kDefaultBudget;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
};

/// Outcome of comparing the three routes on one instance.
struct TheoremOutcome {
  CompressionResult compression;
  CompressionResult fast;
  BruteForceResult brute;

  bool agree() const;
  /// Positive bounded constants must be attained against [empty].
  bool empty_extremal() const;
};

TheoremOutcome evaluate_theorem(const MeasurableMap& map, std::size_t budget,
                                const TheoremOracles& oracles = {});

/// Greedily drops source atoms, then unused target atoms, while `failing`
/// still holds.
MeasurableMap minimize_instance(const MeasurableMap& map,
                                const std::function<bool(const MeasurableMap&)>& failing);

std::string sha256_hex(const std::string& bytes);

RunReport cmd_validate(const std::vector<std::string>& paths);
RunReport cmd_classify(const std::string& map_path);
RunReport cmd_theorem_check(const TheoremCheckOptions& options, const TheoremOracles& oracles = {});
RunReport cmd_functor_check(const std::string& f_path, const std::string& g_path);

}  // namespace measalg::cli
