#pragma once

#include <string>
#include <vector>

namespace upscalc {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first failure found, or a short summary
};

// The full built-in validation suite.  Every check is exact; a failing
// check reports the first counterexample it hit.
std::vector<CheckResult> run_selfchecks();

}  // namespace upscalc
