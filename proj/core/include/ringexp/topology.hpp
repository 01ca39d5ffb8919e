#pragma once

#include "ringexp/bounds.hpp"
#include "ringexp/verdict.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ringexp {

/// Subsets of the points of a finite space (at most 64 points).
using PointMask = std::uint64_t;
/// Finite set of opens, sorted ascending and duplicate-free.
using OpenCover = std::vector<PointMask>;

/// A finite T0 space given by its specialization order. Opens are the
/// down-sets: p <= q means every open containing q contains p.
class FiniteSpace {
 public:
  FiniteSpace() = default;
  /// Throws ValidationError unless leq is a partial order.
  static FiniteSpace from_order(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq,
                                std::vector<std::string> labels = {});
  static FiniteSpace discrete(std::size_t n);

  std::size_t size() const noexcept { return down_.size(); }
  PointMask all() const noexcept { return size() == 64 ? ~PointMask{0} : (PointMask{1} << size()) - 1; }
  bool leq(std::size_t p, std::size_t q) const { return down_[q] >> p & 1; }
  PointMask down(std::size_t p) const { return down_[p]; }
  PointMask up(std::size_t p) const { return up_[p]; }
  bool is_open(PointMask s) const;
  PointMask down_closure(PointMask s) const;
  /// All opens in ascending mask order. Throws CapacityError above the point bound.
  std::vector<PointMask> opens(const Bounds& bounds = {}) const;
  std::vector<std::size_t> maximal_points() const;
  bool is_discrete() const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Induced order on the points of y, renumbered in ascending order.
  FiniteSpace subspace(PointMask y) const;
  /// Order pairs p < q (Hasse covers only when hasse is set).
  std::vector<std::pair<std::size_t, std::size_t>> order_pairs(bool hasse) const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) { return a.down_ == b.down_; }

 private:
  std::vector<PointMask> down_;
  std::vector<PointMask> up_;
  std::vector<std::string> labels_;
};

/// A point map between finite spaces.
struct SpaceMap {
  std::vector<std::size_t> f;
  std::size_t operator()(std::size_t p) const { return f[p]; }
  friend bool operator==(const SpaceMap&, const SpaceMap&) = default;
};

SpaceMap identity_map(std::size_t n);
SpaceMap compose(const SpaceMap& outer, const SpaceMap& inner);
SpaceMap inverse(const SpaceMap& h);
bool is_continuous(const FiniteSpace& x, const FiniteSpace& y, const SpaceMap& h);
bool is_homeomorphism(const FiniteSpace& x, const SpaceMap& h);
/// Throws ValidationError unless h is a homeomorphism of x.
void check_homeomorphism(const FiniteSpace& x, const SpaceMap& h);
std::vector<SpaceMap> homeomorphisms(const FiniteSpace& x);

PointMask preimage_set(const SpaceMap& h, PointMask s);
OpenCover make_cover(std::vector<PointMask> members);
bool is_cover(const FiniteSpace& x, const OpenCover& u);
OpenCover normalize_cover(const OpenCover& u);
/// Pairwise intersections with empty sets dropped.
OpenCover cover_wedge(const OpenCover& a, const OpenCover& b);
OpenCover cover_wedge(std::span<const OpenCover> covers);
bool cover_refines(const OpenCover& a, const OpenCover& b);
OpenCover preimage_cover(const SpaceMap& h, const OpenCover& u);

/// Covers in which every member has a point no other member has. Ordered
/// finest first: total member size, then lexicographically.
std::vector<OpenCover> irredundant_covers(const FiniteSpace& x, const Bounds& bounds = {});
/// Every cover (any subset of the opens that covers). Small spaces only.
std::vector<OpenCover> all_covers(const FiniteSpace& x, const Bounds& bounds = {});

using TopVerdict = Verdict<OpenCover>;

/// Window decisions for one candidate cover.
TopVerdict is_expansivity_cover(const FiniteSpace& x, const SpaceMap& h, const OpenCover& u, bool positive,
                                const Bounds& bounds = {});
TopVerdict is_refinement_expansive(const FiniteSpace& x, const SpaceMap& h, const Bounds& bounds = {});
TopVerdict is_positively_expansive_top(const FiniteSpace& x, const SpaceMap& h, const Bounds& bounds = {});
/// The single-power form: some U such that every V admits n with h^{-n}(U) refining V.
TopVerdict is_positively_expansive_single_power(const FiniteSpace& x, const SpaceMap& h, const Bounds& bounds = {});
TopVerdict has_minimal_cover(const FiniteSpace& x, const Bounds& bounds = {});

/// Extension-closedness of y in x, decided through maximal extensions.
struct ExtensionVerdict {
  Status status = Status::Refuted;
  /// cover of y (in x's point numbering) and the extending cover of x
  std::vector<std::pair<OpenCover, OpenCover>> extensions;
  std::optional<OpenCover> failing;
};
ExtensionVerdict is_extension_closed(const FiniteSpace& x, PointMask y, const Bounds& bounds = {});

/// All partial orders on n points up to isomorphism (n <= 7).
std::vector<FiniteSpace> enumerate_posets(std::size_t n);

}  // namespace ringexp
