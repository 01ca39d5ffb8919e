#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ringexp {

enum class Status { Proved, Refuted, UnknownAtBound };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Proved:
      return "Proved";
    case Status::Refuted:
      return "Refuted";
    case Status::UnknownAtBound:
      return "UnknownAtBound";
  }
  return "?";
}

/// Outcome of a decision procedure over some kind of family (generators,
/// symbolic generators, open covers, chain covers).
///
/// For a single-candidate decision `candidate` is the tested family, and on
/// success it is also the `witness`. For searches over candidates `rejected`
/// lists every discarded candidate together with the target that defeated it.
template <class Family>
struct Verdict {
  Status status = Status::Refuted;
  bool positive = false;
  std::optional<Family> candidate;
  std::optional<Family> witness;
  std::optional<Family> refuter;
  /// Least window index refining each target.
  std::vector<std::pair<Family, std::size_t>> n_table;
  /// Normalized windows W_0 .. W_last; windows past `last` repeat the cycle.
  std::vector<Family> windows;
  std::size_t cycle_start = 0;
  std::size_t cycle_length = 0;
  std::vector<std::pair<Family, Family>> rejected;
  /// False when a positive answer only holds on a tested grid or window.
  bool exact = true;
  bool degenerate = false;
  std::string note;

  bool proved() const { return status == Status::Proved; }
};

}  // namespace ringexp
