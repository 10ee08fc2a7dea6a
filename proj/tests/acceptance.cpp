// Acceptance suite: runs every criterion at full size and prints one
// pass/fail line per criterion. Exit code 0 only if all pass.

#include <chrono>
#include <cstdio>

#include "hamdisc/verify.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  const auto results = hamdisc::run_acceptance(/*threads=*/4);
  bool all_passed = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& result = results[i];
    all_passed = all_passed && result.passed;
    std::printf("[%s] criterion %2zu: %s — %s\n", result.passed ? "PASS" : "FAIL", i + 1,
                result.name.c_str(), result.detail.c_str());
  }
  const double elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start).count() / 1000.0;
  std::printf("%s (%zu criteria, %.1fs)\n",
              all_passed ? "acceptance: all criteria passed" : "acceptance: FAILURES",
              results.size(), elapsed);
  return all_passed ? 0 : 1;
}
