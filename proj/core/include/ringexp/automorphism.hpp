#pragma once

#include "ringexp/ring.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ringexp {

/// A validated ring automorphism, stored as its image permutation.
class RingAutomorphism {
 public:
  /// Validates bijectivity, unitality and both homomorphism laws. Throws
  /// ValidationError naming the violated law and a witness.
  static RingAutomorphism make(RingPtr host, std::vector<Elem> image);
  static RingAutomorphism identity(RingPtr host);

  const RingPtr& host() const noexcept { return host_; }
  const std::vector<Elem>& image() const noexcept { return image_; }
  Elem operator()(Elem a) const { return image_[a]; }

  /// (*this)(other(x)).
  RingAutomorphism compose(const RingAutomorphism& other) const;
  RingAutomorphism inverse() const;
  RingAutomorphism power(std::int64_t n) const;
  std::uint64_t order() const;
  bool is_identity() const;

  friend bool operator==(const RingAutomorphism& a, const RingAutomorphism& b) {
    return a.host_ == b.host_ && a.image_ == b.image_;
  }

 private:
  RingAutomorphism(RingPtr host, std::vector<Elem> image) : host_(std::move(host)), image_(std::move(image)) {}
  RingPtr host_;
  std::vector<Elem> image_;
};

/// All automorphisms, identity first, the rest in lexicographic image order.
std::vector<RingAutomorphism> enumerate_automorphisms(const RingPtr& r, const Bounds& bounds = {});

/// a -> a^p with p the characteristic; valid exactly when that map is an
/// automorphism (e.g. on finite fields and products of them).
RingAutomorphism frobenius(const RingPtr& r);

/// Exchanges factors i and j of a product ring. The two factors must have
/// identical tables.
RingAutomorphism swap_factors(const RingPtr& product, std::size_t i, std::size_t j);

/// Componentwise automorphism of a product ring.
RingAutomorphism product_automorphism(const RingPtr& product, std::span<const RingAutomorphism> parts);

/// Closure of s under + and *. Used to pick small generating sets.
ElementSet subring_closure(const FiniteRing& r, std::span<const Elem> s);

}  // namespace ringexp
