#pragma once

#include "ringexp/automorphism.hpp"
#include "ringexp/bounds.hpp"
#include "ringexp/ideal.hpp"

#include <boost/dynamic_bitset.hpp>

#include <map>
#include <optional>
#include <vector>

namespace ringexp {

/// The complete ideal lattice of a finite ring.
///
/// Ideals are indexed in ElementSet order (size, then elements), which is a
/// linear extension of inclusion: index 0 is the zero ideal and the last
/// index is R. Sums are joins in the inclusion order; products are joins of
/// principal ideals of products of ideal generators.
class IdealLattice {
 public:
  explicit IdealLattice(RingPtr ring, const Bounds& bounds = {});

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return ideals_.size(); }
  const Ideal& operator[](std::size_t i) const { return ideals_[i]; }
  const std::vector<Ideal>& ideals() const noexcept { return ideals_; }
  std::size_t zero_index() const noexcept { return 0; }
  std::size_t whole_index() const noexcept { return ideals_.size() - 1; }

  /// Index of an ideal of this ring. Throws DomainError when absent.
  std::size_t index_of(const Ideal& i) const;
  std::optional<std::size_t> find(const ElementSet& s) const;

  bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  std::size_t sum(std::size_t i, std::size_t j) const;
  std::size_t product(std::size_t i, std::size_t j) const;

  const std::vector<std::size_t>& maximal() const noexcept { return maximal_; }
  const std::vector<std::size_t>& primes() const noexcept { return primes_; }
  bool is_local() const noexcept { return maximal_.size() == 1; }
  bool is_maximal(std::size_t i) const;

  /// perm[i] = index of alpha^{-1}(I_i).
  std::vector<std::size_t> preimage_permutation(const RingAutomorphism& alpha) const;
  /// perm[i] = index of alpha(I_i).
  std::vector<std::size_t> image_permutation(const RingAutomorphism& alpha) const;

  /// Ideal generators of I_i, as elements of the ring.
  const std::vector<Elem>& generators_of(std::size_t i) const { return gens_[i]; }

 private:
  RingPtr ring_;
  std::vector<Ideal> ideals_;
  std::vector<std::vector<Elem>> gens_;
  std::map<ElementSet, std::size_t> index_;
  std::vector<boost::dynamic_bitset<>> up_;
  std::vector<std::size_t> principal_;  // element -> index of (a)
  std::vector<std::size_t> maximal_;
  std::vector<std::size_t> primes_;
};

/// All ideals, zero first, R last.
std::vector<Ideal> enumerate_ideals(const RingPtr& r, const Bounds& bounds = {});
std::vector<Ideal> maximal_ideals(const RingPtr& r, const Bounds& bounds = {});
/// Maximality among proper ideals. Throws DomainError for I = R.
bool is_maximal(const Ideal& i, const Bounds& bounds = {});

/// Independent subset brute force: every additive subgroup closed under
/// multiplication. Oracle for small rings (order <= 32).
std::vector<Ideal> enumerate_ideals_brute_force(const RingPtr& r);

}  // namespace ringexp
