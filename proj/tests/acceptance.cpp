// One line per acceptance criterion, in order. Nonzero exit if any fails.

#include <cstdio>

#include "twc/verify.hpp"

int main() {
  twc::VerifyOptions options;
  options.n_max = 5;
  options.cutoff = 8;
  options.seed = 1;

  int failed = 0;
  double total = 0;
  const auto &names = twc::suite_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto r = twc::run_suite(names[i], options);
    total += r.seconds;
    failed += !r.ok();
    std::printf("[%s] %2zu %-20s cases=%-6ld failures=%-4zu time=%.2fs\n", r.ok() ? "PASS" : "FAIL", i + 1,
                r.suite.c_str(), r.cases, r.failures.size(), r.seconds);
    for (std::size_t f = 0; f < r.failures.size() && f < 3; ++f)
      std::printf("       %s: %s != %s\n", r.failures[f].inputs.c_str(), r.failures[f].lhs.c_str(),
                  r.failures[f].rhs.c_str());
    for (const auto &note : r.notes) std::printf("       note: %s\n", note.c_str());
  }
  std::printf("%zu/%zu criteria passed in %.2fs\n", names.size() - failed, names.size(), total);
  return failed == 0 ? 0 : 1;
}
