#pragma once

// Formula-vs-oracle consistency suite.  Each named check compares one slice
// of the formula engine against brute force (or against an independent
// formula) inside a configurable budget and reports pass/fail with the first
// mismatch spelled out.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "pogp/oracle.hpp"
#include "pogp/series.hpp"

namespace pogp::verify {

struct Options {
  int max_alphabet = 3;  // largest k exercised
  int max_length = 8;    // largest n / truncation order exercised
  /// Subset of check_names() to run; empty means all.
  std::vector<std::string> only;
  EnumLimits limits{};
  /// Test hook: substitutes the registry closed forms (fault injection).
  std::function<Series(std::string_view, int, int)> registry_override;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // what was covered, or the first failure
};

struct Report {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// The available checks, in execution order: eq1, registry, quasi, multi,
/// shuffle, mnd, expand, equiv.
const std::vector<std::string>& check_names();

/// Runs the selected checks.  Throws std::invalid_argument for an unknown
/// name in opts.only; budget overruns surface as BudgetExceeded.
Report run(const Options& opts = {});

}  // namespace pogp::verify
