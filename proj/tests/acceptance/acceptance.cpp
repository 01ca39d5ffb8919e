// Runs every acceptance suite once and prints one line per criterion.
#include "ringexp/suites/suites.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
  ringexp::suites::SuiteOptions opt;
  if (argc > 1) opt.seed = std::strtoull(argv[1], nullptr, 10);

  const auto reports = ringexp::suites::run_all(opt);
  int failed = 0;
  for (const auto& r : reports) {
    std::printf("%s %2d %-16s checks=%zu failed=%zu %.2fs\n", r.pass() ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.checks, r.failed, r.seconds);
    for (const auto& f : r.failures) std::printf("     - %s\n", f.c_str());
    for (const auto& n : r.notes) std::printf("     note: %s\n", n.c_str());
    failed += !r.pass();
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(reports.size()) - failed, reports.size());
  return failed == 0 ? 0 : 1;
}
