#include <bqg/acceptance.hpp>

#include <cstdio>
#include <iostream>

int main() {
  bool all = true;
  std::size_t passed = 0;
  const auto& checks = bqg::acceptance_checks();
  for (const auto& c : checks) {
    const auto r = bqg::run_check(c);
    std::printf("%s  criterion %2d  %-66s %7.2fs / %.0fs\n", r.passed ? "PASS" : "FAIL", r.id,
                r.title.c_str(), r.seconds, r.budget_seconds);
    std::printf("      %s\n", r.detail.c_str());
    std::fflush(stdout);
    all = all && r.passed;
    if (r.passed) ++passed;
  }
  std::printf("%zu/%zu criteria passed\n", passed, checks.size());
  return all ? 0 : 1;
}
