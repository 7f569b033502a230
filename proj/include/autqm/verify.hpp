#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace autqm {

struct VerifyConfig {
  std::uint64_t seed = 20240607;
};

/// Outcome of one acceptance check.
struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// Correctness alone, before the time limit is applied.
  bool correct = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

/// Suite names accepted by run_suite, `all` first, then the older aliases.
std::vector<std::string> suite_names();

/// Check ids making up a suite. Throws MalformedInput on an unknown name.
std::vector<int> suite_checks(const std::string& suite);

/// Runs one numbered check (1..13).
CheckResult run_check(int id, const VerifyConfig& config);

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyConfig& config);

}  // namespace autqm
