#include "ringexp/lattice.hpp"

#include "ringexp/errors.hpp"

#include <algorithm>
#include <set>

namespace ringexp {

IdealLattice::IdealLattice(RingPtr ring, const Bounds& bounds) : ring_(std::move(ring)) {
  const FiniteRing& r = *ring_;
  if (r.order() > bounds.max_order) throw CapacityError("ring order exceeds bound");

  std::set<ElementSet> found;
  std::vector<Ideal> work;
  auto add = [&](Ideal i) {
    if (found.insert(i.members()).second) {
      if (found.size() > bounds.max_ideals) {
        throw CapacityError("ideal lattice exceeds bound of " + std::to_string(bounds.max_ideals) + " ideals");
      }
      work.push_back(std::move(i));
    }
  };
  for (Elem a = 0; a < r.order(); ++a) add(principal_ideal(ring_, a));
  // pairwise sums to fixpoint
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(ideal_sum(work[i], work[j]));

  for (const auto& s : found) ideals_.push_back(Ideal::unchecked(ring_, s));
  const std::size_t m = ideals_.size();
  for (std::size_t i = 0; i < m; ++i) index_.emplace(ideals_[i].members(), i);

  up_.assign(m, boost::dynamic_bitset<>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      if (ideals_[i].subset_of(ideals_[j])) up_[i].set(j);

  principal_.resize(r.order());
  for (Elem a = 0; a < r.order(); ++a) principal_[a] = index_.at(principal_ideal(ring_, a).members());

  gens_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t acc = 0;
    ideals_[i].members().for_each([&](Elem a) {
      if (!leq(principal_[a], acc)) {
        acc = sum(acc, principal_[a]);
        gens_[i].push_back(a);
      }
    });
  }

  if (m > 1) {
    for (std::size_t i = 0; i + 1 < m; ++i) {
      if (is_maximal(i)) maximal_.push_back(i);
      if (is_prime(ideals_[i])) primes_.push_back(i);
    }
  }
}

std::size_t IdealLattice::index_of(const Ideal& i) const {
  if (i.host() != ring_) throw HostMismatch("lattice: ideal from a different ring");
  auto it = index_.find(i.members());
  if (it == index_.end()) throw DomainError("lattice: set is not an ideal of this ring");
  return it->second;
}

std::optional<std::size_t> IdealLattice::find(const ElementSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t IdealLattice::sum(std::size_t i, std::size_t j) const {
  // the join is the least common upper bound, i.e. the first index
  return (up_[i] & up_[j]).find_first();
}

std::size_t IdealLattice::product(std::size_t i, std::size_t j) const {
  std::size_t acc = 0;
  for (Elem a : gens_[i])
    for (Elem b : gens_[j]) acc = sum(acc, principal_[ring_->mul(a, b)]);
  return acc;
}

bool IdealLattice::is_maximal(std::size_t i) const {
  if (i == whole_index()) throw DomainError("is_maximal: the whole ring is not a proper ideal");
  // exactly two ideals above: itself and R
  return up_[i].count() == 2;
}

std::vector<std::size_t> IdealLattice::preimage_permutation(const RingAutomorphism& alpha) const {
  if (alpha.host() != ring_) throw HostMismatch("lattice: automorphism from a different ring");
  std::vector<std::size_t> perm(size());
  for (std::size_t i = 0; i < size(); ++i) perm[i] = index_.at(preimage(alpha, ideals_[i]).members());
  return perm;
}

std::vector<std::size_t> IdealLattice::image_permutation(const RingAutomorphism& alpha) const {
  if (alpha.host() != ring_) throw HostMismatch("lattice: automorphism from a different ring");
  std::vector<std::size_t> perm(size());
  for (std::size_t i = 0; i < size(); ++i) perm[i] = index_.at(image(alpha, ideals_[i]).members());
  return perm;
}

std::vector<Ideal> enumerate_ideals(const RingPtr& r, const Bounds& bounds) { return IdealLattice(r, bounds).ideals(); }

std::vector<Ideal> maximal_ideals(const RingPtr& r, const Bounds& bounds) {
  IdealLattice lat(r, bounds);
  std::vector<Ideal> out;
  for (auto i : lat.maximal()) out.push_back(lat[i]);
  return out;
}

bool is_maximal(const Ideal& i, const Bounds& bounds) {
  IdealLattice lat(i.host(), bounds);
  return lat.is_maximal(lat.index_of(i));
}

std::vector<Ideal> enumerate_ideals_brute_force(const RingPtr& rp) {
  const FiniteRing& r = *rp;
  const std::size_t n = r.order();
  if (n > 32) throw CapacityError("brute-force ideal enumeration is limited to order 32");
  auto absorbs = [&](const ElementSet& s) {
    bool ok = true;
    s.for_each([&](Elem a) {
      for (Elem x = 0; ok && x < n; ++x) ok = s.contains(r.mul(x, a));
    });
    return ok;
  };
  auto is_subgroup = [&](const ElementSet& s) {
    if (!s.contains(r.zero())) return false;
    bool ok = true;
    s.for_each([&](Elem a) {
      s.for_each([&](Elem b) { ok = ok && s.contains(r.sub(a, b)); });
    });
    return ok;
  };
  std::set<ElementSet> found;
  if (n <= 16) {
    // literally every subset
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      ElementSet s(n);
      for (Elem a = 0; a < n; ++a)
        if (mask >> a & 1u) s.insert(a);
      if (is_subgroup(s) && absorbs(s)) found.insert(s);
    }
  } else {
    // subgroup lattice by adjoining single elements, then filter
    std::vector<ElementSet> groups;
    ElementSet zero(n);
    zero.insert(r.zero());
    std::set<ElementSet> seen{zero};
    groups.push_back(zero);
    for (std::size_t g = 0; g < groups.size(); ++g) {
      for (Elem x = 0; x < n; ++x) {
        if (groups[g].contains(x)) continue;
        ElementSet s = groups[g];
        std::vector<Elem> list = s.elements();
        for (std::size_t i = 0; i < list.size(); ++i) {
          const Elem z = r.add(list[i], x);
          if (!s.contains(z)) {
            s.insert(z);
            list.push_back(z);
          }
        }
        if (seen.insert(s).second) groups.push_back(s);
      }
    }
    for (auto& s : groups)
      if (is_subgroup(s) && absorbs(s)) found.insert(s);
  }
  std::vector<Ideal> out;
  for (const auto& s : found) out.push_back(Ideal::unchecked(rp, s));
  return out;
}

}  // namespace ringexp
