// Prints one line per acceptance criterion; exits nonzero if any fails.
#include <cstdio>
#include <thread>

#include "orconv/acceptance.hpp"

int main() {
  orconv::AcceptanceOptions opt;
  opt.workers = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  int failed = 0;
  for (int id = 1; id <= 8; ++id) {
    const auto r = orconv::run_criterion(id, opt);
    std::printf("criterion %d: %s  %s (%.2f s)\n    %s\n", r.id, r.passed ? "PASS" : "FAIL", r.title.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    failed += !r.passed;
  }
  std::printf("%d of 8 criteria passed\n", 8 - failed);
  return failed == 0 ? 0 : 1;
}
