#pragma once

// The acceptance checks, shared by `bergman verify` and the acceptance test
// binary. Each check reports what it measured against the pinned tolerance.

#include <optional>
#include <string>
#include <vector>

#include "bergman/cli/config.hpp"

namespace bergman::cli {

struct CheckResult {
  int criterion = 0;
  std::string name;
  std::string citation;  ///< which result the check witnesses
  double computed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 10;

/// Runs one criterion (1..10). Numerical failures inside the check (for
/// example insufficient series resolution) become a failed result whose
/// detail names the error; they are not rethrown.
CheckResult run_check(int criterion, const RunConfig& cfg);

/// Criteria belonging to a suite (quadrature, projection, bloch, extremal,
/// classify, all); nullopt for an unknown name.
std::optional<std::vector<int>> suite_criteria(const std::string& suite);

}  // namespace bergman::cli
