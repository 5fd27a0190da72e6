// Runs every acceptance criterion against the builtin tables, one line each.
#include <cstdio>

#include "strata/atlas.hpp"
#include "strata/verify.hpp"

int main() {
  int failed = 0;
  for (const auto& r : strata::run_suite("all", strata::Atlas::builtin())) {
    std::printf("[%s] %2d %-22s %9.2f ms  %s\n", r.passed ? "PASS" : "FAIL", r.number, r.name.c_str(),
                r.elapsed_ms, r.detail.c_str());
    failed += !r.passed;
  }
  std::printf("%d failed\n", failed);
  return failed ? 1 : 0;
}
