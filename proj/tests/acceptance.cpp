// Runs every acceptance criterion once and prints one line per criterion.
#include <cstdio>
#include <cstdlib>

#include "autqm/verify.hpp"

int main(int argc, char** argv) {
  autqm::VerifyConfig config;
  if (argc > 1) config.seed = std::strtoull(argv[1], nullptr, 10);
  int failed = 0;
  for (const auto& r : autqm::run_suite("all", config)) {
    std::printf("[%s] %2d %-48s %7.2fs / %.0fs  %s\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.limit_seconds, r.detail.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  std::printf("%d of 13 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
