#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chessgeo::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  /// Worst residual observed by the check (0 when the check is structural).
  double residual = 0.0;
  std::string detail;
};

std::vector<CheckResult> run_acceptance();

/// Runs every check, printing one pass/fail line each; returns all-pass.
bool run_acceptance(std::ostream& os);

}  // namespace chessgeo::verify
