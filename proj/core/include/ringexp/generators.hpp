#pragma once

#include "ringexp/automorphism.hpp"
#include "ringexp/bounds.hpp"
#include "ringexp/ideal.hpp"
#include "ringexp/lattice.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ringexp {

/// A finite set of ideals whose sum is the whole ring.
///
/// Members are kept sorted and duplicate-free, so two GeneratorSets compare
/// equal exactly when they are the same set of ideals.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  /// Throws ValidationError if the family is empty or does not generate.
  static GeneratorSet make(RingPtr host, std::vector<Ideal> ideals);
  /// No generator check; used for intermediate families known to generate.
  static GeneratorSet unchecked(RingPtr host, std::vector<Ideal> ideals);

  const RingPtr& host() const noexcept { return host_; }
  const std::vector<Ideal>& ideals() const noexcept { return ideals_; }
  std::size_t size() const noexcept { return ideals_.size(); }
  bool contains(const Ideal& i) const;
  bool contains_whole() const;

  friend bool operator==(const GeneratorSet& a, const GeneratorSet& b) { return a.ideals_ == b.ideals_; }
  friend auto operator<=>(const GeneratorSet& a, const GeneratorSet& b) { return a.ideals_ <=> b.ideals_; }

 private:
  GeneratorSet(RingPtr host, std::vector<Ideal> ideals);
  RingPtr host_;
  std::vector<Ideal> ideals_;
};

bool is_generator(const RingPtr& r, std::span<const Ideal> ideals);

/// A refines B: every member of A lies in some member of B.
bool refines(const GeneratorSet& a, const GeneratorSet& b);
/// For each member of A, the position in B of a member containing it.
std::optional<std::vector<std::size_t>> refinement_map(const GeneratorSet& a, const GeneratorSet& b);

GeneratorSet gen_product(const GeneratorSet& a, const GeneratorSet& b);
/// A^e with the empty-product convention A^0 = {R}.
GeneratorSet gen_power(const GeneratorSet& a, std::uint64_t e);
/// {alpha^{-1}(I) : I in A}.
GeneratorSet pullback(const RingAutomorphism& alpha, const GeneratorSet& a);
/// Drops every member strictly contained in another member.
GeneratorSet normalize_antichain(const GeneratorSet& a);
bool is_antichain(const GeneratorSet& a);

/// All antichain generators (or all generating subsets), in lexicographic
/// order of their member lists.
std::vector<GeneratorSet> enumerate_generators(const IdealLattice& lat, bool antichains_only, const Bounds& bounds = {});

/// Families of lattice ideals as 64-bit masks over lattice indices.
using FamilyMask = std::uint64_t;

/// Generator calculus on masks, for lattices of at most 64 ideals.
class MaskAlgebra {
 public:
  explicit MaskAlgebra(const IdealLattice& lat);

  const IdealLattice& lattice() const noexcept { return *lat_; }
  std::size_t size() const noexcept { return m_; }
  FamilyMask whole() const noexcept { return FamilyMask{1} << (m_ - 1); }

  bool refines(FamilyMask a, FamilyMask b) const {
    for (; a; a &= a - 1)
      if (!(above_[static_cast<std::size_t>(__builtin_ctzll(a))] & b)) return false;
    return true;
  }
  FamilyMask normalize(FamilyMask a) const {
    FamilyMask out = a;
    for (FamilyMask t = a; t; t &= t - 1) {
      const auto i = static_cast<std::size_t>(__builtin_ctzll(t));
      if (strictly_above_[i] & a) out &= ~(FamilyMask{1} << i);
    }
    return out;
  }
  FamilyMask product(FamilyMask a, FamilyMask b) const;
  FamilyMask permute(FamilyMask a, const std::vector<std::size_t>& perm) const;
  bool is_generator(FamilyMask a) const;
  bool is_antichain(FamilyMask a) const { return normalize(a) == a; }
  FamilyMask above(std::size_t i) const { return above_[i]; }

  GeneratorSet to_set(FamilyMask a) const;
  FamilyMask to_mask(const GeneratorSet& g) const;

  /// Antichain generators in lexicographic order of sorted index lists.
  std::vector<FamilyMask> antichain_generators(const Bounds& bounds = {}) const;

  /// Lexicographic comparison of sorted index lists.
  static bool lex_less(FamilyMask a, FamilyMask b);

 private:
  const IdealLattice* lat_;
  std::size_t m_;
  std::vector<FamilyMask> above_;
  std::vector<FamilyMask> strictly_above_;
  std::vector<FamilyMask> below_;
  std::vector<std::uint8_t> prod_;
  std::vector<std::uint8_t> sum_;
};

}  // namespace ringexp
