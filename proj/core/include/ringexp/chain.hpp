#pragma once

#include "ringexp/verdict.hpp"

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace ringexp {

// The space X = [-1,1] with h(x) = cube root of x. The orbit points
// h^i(1/2) and h^i(-1/2) are indexed by i; opens containing 0 are encoded by
// two cuts: the largest index kept on each side (kInf keeps the whole side
// including its endpoint). Every open of a cover of X that matters for the
// window calculus contains 0, so covers are finite sets of cut pairs.

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

struct ChainOpen {
  std::int64_t neg = kInf;
  std::int64_t pos = kInf;

  bool is_whole() const noexcept { return neg == kInf && pos == kInf; }
  std::string str() const;
  friend bool operator==(const ChainOpen&, const ChainOpen&) = default;
  friend auto operator<=>(const ChainOpen&, const ChainOpen&) = default;
};

using ChainCover = std::vector<ChainOpen>;

ChainOpen chain_meet(const ChainOpen& a, const ChainOpen& b);
bool chain_subset(const ChainOpen& a, const ChainOpen& b);
ChainCover chain_make_cover(std::vector<ChainOpen> members);
/// Covers X: some member keeps the whole positive side, some the whole negative side.
bool chain_is_cover(const ChainCover& u);
ChainCover chain_normalize(const ChainCover& u);
ChainCover chain_wedge(const ChainCover& a, const ChainCover& b);
bool chain_refines(const ChainCover& a, const ChainCover& b);
/// Preimage under h^s: finite cuts move by -s.
ChainCover chain_pull(const ChainCover& u, std::int64_t s);
std::string chain_str(const ChainCover& u);

/// {X} and every {(a,inf),(inf,b)} with lo <= a,b <= hi.
std::vector<ChainCover> chain_irredundant_covers(std::int64_t lo, std::int64_t hi);
/// {[-1,1/2), (-1/2,1]}.
ChainCover chain_standard_cover();

using ChainVerdict = Verdict<ChainCover>;

/// Positive windows of u under h^step against every irredundant cover with
/// cuts in [-m, m]. A window fixpoint that misses an adversary is an exact
/// refutation; success holds for the tested adversaries only.
ChainVerdict chain_positively_expansive(std::int64_t step, const ChainCover& u, std::int64_t m, std::size_t n_max);
/// Runs the decision above for every irredundant candidate with cuts in
/// [-(m-1), m-1]; Refuted when all of them are refuted.
ChainVerdict chain_positive_sweep(std::int64_t step, std::int64_t m, std::size_t n_max);

/// For an irredundant cover, a cover it does not refine: cuts c-1 where c is the largest
/// finite cut of the candidate (0 if it has none).
ChainCover chain_minimal_certificate(const ChainCover& candidate);
/// No irredundant candidate with cuts in [-m, m] refines every cover.
ChainVerdict chain_minimal_cover(std::int64_t m);

}  // namespace ringexp
