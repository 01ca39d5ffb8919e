#pragma once

#include "ringexp/errors.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace ringexp {

/// Normalized product windows of a family under an invertible map.
///
/// Positive:  W_n = prod_{i=0..n} h^{-i}(I), carried as P_{n+1} = I * h^{-1}(P_n).
/// Two-sided: W_n = prod_{|i|<=n} h^{-i}(I) = P_n * h(M_{n-1}), with
///            M_{n+1} = I * h(M_n).
/// Iteration stops at the first repeated state; every later window equals
/// one already listed.
///
/// Calc provides: Family, normalize(F), product(F, F), pull(F, dir) where
/// dir = +1 is h^{-1} and dir = -1 is h. Family must be totally ordered.
template <class Family>
struct WindowTrace {
  std::vector<Family> windows;
  std::size_t cycle_start = 0;
  std::size_t cycle_length = 0;
};

template <class Calc>
WindowTrace<typename Calc::Family> trace_windows(const Calc& calc, const typename Calc::Family& seed, bool positive,
                                                 std::size_t max_steps = std::size_t{1} << 20) {
  using F = typename Calc::Family;
  WindowTrace<F> out;
  const F base = calc.normalize(seed);
  F p = base;
  F m = base;
  std::map<std::pair<F, F>, std::size_t> seen;
  seen.emplace(std::pair<F, F>{p, positive ? F{} : m}, 0);
  out.windows.push_back(base);
  for (std::size_t n = 1;; ++n) {
    if (n > max_steps) throw CapacityError("window sequence did not repeat within step bound");
    F p_next = calc.normalize(calc.product(base, calc.pull(p, +1)));
    if (positive) {
      out.windows.push_back(p_next);
    } else {
      out.windows.push_back(calc.normalize(calc.product(p_next, calc.pull(m, -1))));
      m = calc.normalize(calc.product(base, calc.pull(m, -1)));
    }
    p = std::move(p_next);
    auto [it, fresh] = seen.emplace(std::pair<F, F>{p, positive ? F{} : m}, n);
    if (!fresh) {
      out.cycle_start = it->second;
      out.cycle_length = n - it->second;
      return out;
    }
  }
}

}  // namespace ringexp
