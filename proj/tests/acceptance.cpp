#include <cstdio>

#include "frameforge/acceptance.hpp"

// One line per criterion; exit status is nonzero if any criterion fails.
int main() {
  frameforge::AcceptanceOptions options;
  const auto results = frameforge::run_acceptance(options);
  int failed = 0;
  for (const auto& r : results) {
    std::printf("%s %s\n", r.pass() ? "PASS" : "FAIL", r.name.c_str());
    for (const auto& c : r.checks) {
      std::printf("    %-28s %-4s %.6g %s %.6g\n", c.name.c_str(), c.pass ? "ok" : "BAD", c.measured,
                  c.relation.c_str(), c.bound);
    }
    if (!r.error.empty()) std::printf("    error: %s\n", r.error.c_str());
    if (!r.pass()) ++failed;
  }
  std::printf("%zu criteria, %d failed\n", results.size(), failed);
  return failed == 0 ? 0 : 1;
}
