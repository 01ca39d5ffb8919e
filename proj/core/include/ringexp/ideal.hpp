#pragma once

#include "ringexp/automorphism.hpp"
#include "ringexp/element_set.hpp"
#include "ringexp/ring.hpp"

#include <compare>
#include <span>
#include <vector>

namespace ringexp {

/// An ideal of a finite ring, as a set of element indices.
class Ideal {
 public:
  Ideal() = default;

  /// Checks the ideal axioms; throws ValidationError otherwise.
  static Ideal validated(RingPtr host, ElementSet members);
  /// Trusted constructor for sets already known to be ideals.
  static Ideal unchecked(RingPtr host, ElementSet members) { return Ideal(std::move(host), std::move(members)); }

  const RingPtr& host() const noexcept { return host_; }
  const ElementSet& members() const noexcept { return members_; }
  bool contains(Elem e) const { return members_.contains(e); }
  std::size_t count() const noexcept { return members_.count(); }
  bool is_zero() const { return members_.count() == 1; }
  bool is_whole() const { return members_.count() == host_->order(); }
  bool subset_of(const Ideal& o) const { return members_.is_subset_of(o.members_); }
  std::vector<Elem> elements() const { return members_.elements(); }

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.members_ == b.members_; }
  friend std::strong_ordering operator<=>(const Ideal& a, const Ideal& b) { return a.members_ <=> b.members_; }

 private:
  Ideal(RingPtr host, ElementSet members) : host_(std::move(host)), members_(std::move(members)) {}
  RingPtr host_;
  ElementSet members_;
};

Ideal zero_ideal(const RingPtr& r);
Ideal whole_ideal(const RingPtr& r);
Ideal principal_ideal(const RingPtr& r, Elem a);
/// Smallest ideal containing s.
Ideal ideal_generated(const RingPtr& r, std::span<const Elem> s);
/// A short list of elements generating the ideal (greedy, ascending).
std::vector<Elem> ideal_generators(const Ideal& i);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
Ideal radical(const Ideal& i);
Ideal annihilator(const Ideal& i);

/// Exhaustive pair check. Throws DomainError for i = R.
bool is_prime(const Ideal& i);

/// alpha(I) and alpha^{-1}(I).
Ideal image(const RingAutomorphism& alpha, const Ideal& i);
Ideal preimage(const RingAutomorphism& alpha, const Ideal& i);

ElementSet idempotent_elements(const FiniteRing& r);
/// Complete orthogonal family of primitive idempotents, ascending. Empty for
/// the trivial ring.
std::vector<Elem> primitive_orthogonal_idempotents(const FiniteRing& r);

/// R/I with the projection R -> R/I. Quotient elements are numbered by their
/// least coset representative.
struct Quotient {
  RingPtr ring;
  std::vector<Elem> projection;
  Ideal kernel;
};
Quotient make_quotient(const Ideal& i);

/// The automorphism of R/I induced by alpha. Requires alpha(I) = I.
RingAutomorphism induced_automorphism(const RingAutomorphism& alpha, const Quotient& q);

}  // namespace ringexp
