#pragma once

#include "ringexp/suites/suites.hpp"

#include <chrono>
#include <string>

namespace ringexp::suites::detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline SuiteReport make_report(int id, double budget = 0.0) {
  SuiteReport r;
  r.id = id;
  r.name = suite_names().at(static_cast<std::size_t>(id - 1));
  r.budget = budget;
  return r;
}

/// Records the elapsed time and, for budgeted suites, checks it.
inline void finish(SuiteReport& r, const Stopwatch& w) {
  r.seconds = w.seconds();
  if (r.budget > 0)
    r.expect(r.seconds < r.budget, "runtime " + std::to_string(r.seconds) + " s exceeds budget " +
                                       std::to_string(r.budget) + " s");
}

}  // namespace ringexp::suites::detail
