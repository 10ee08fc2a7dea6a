#pragma once

#include <string>
#include <vector>

namespace hamdisc {

enum class VerifyLevel { quick, full };

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Identity and characterization suites. `quick` runs reduced sizes in under a
// minute; `full` runs every check at its full size. All randomized checks use
// fixed master seeds, so results are reproducible run to run.
std::vector<CheckResult> run_verification(VerifyLevel level, unsigned threads = 1);

// The full-size checks only, numbered and named for the acceptance suite.
std::vector<CheckResult> run_acceptance(unsigned threads = 1);

}  // namespace hamdisc
