#pragma once

// Property suites run against the brute-force oracles. Each check is
// deterministic; the level picks the exhaustive scales.

#include <functional>
#include <string>
#include <vector>

namespace polylat::checks {

enum class Level { quick, full };

struct CheckResult {
  std::string name;
  /// Name of the result being verified, e.g. "full-grid projection lemma".
  std::string tag;
  bool passed = true;
  /// Number of individual comparisons performed.
  std::size_t cases = 0;
  /// First failing case, or a short summary.
  std::string detail;
};

struct Check {
  std::string name;
  std::string tag;
  std::function<CheckResult(Level)> run;
};

/// All checks in a fixed order.
const std::vector<Check>& registry();

/// Runs one check by name; throws std::out_of_range for an unknown name.
CheckResult run_check(const std::string& name, Level level);

}  // namespace polylat::checks
