#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace pvalid {

struct Check {
  std::string name;
  std::string detail;
  bool passed = false;
};

/// Outcome of a verification suite; a failed check is data, not an error.
struct Report {
  std::string suite;
  std::vector<Check> checks;
  /// One-line conclusion drawn from the checks, when the suite has one.
  std::string verdict;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }

  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back(Check{std::move(name), std::move(detail), ok});
  }
};

}  // namespace pvalid
