#pragma once

#include "ringexp/bounds.hpp"
#include "ringexp/element_set.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ringexp {

/// How a ring was built. Recipes compile down to operation tables, so no
/// downstream algorithm ever looks at them; they exist for reports, element
/// encodings and reproducible file round trips.
struct Recipe {
  enum class Kind { cyclic, poly_quotient, product, quotient, explicit_tables };

  Kind kind = Kind::cyclic;
  std::uint32_t modulus = 0;              ///< n for cyclic, p for poly_quotient
  std::vector<std::uint32_t> coeffs;      ///< poly_quotient modulus, low to high, monic
  std::vector<Recipe> parts;              ///< product factors, or {base} for quotient
  std::vector<Elem> ideal_generators;     ///< quotient: element indices of the base ring

  std::string describe() const;
  friend bool operator==(const Recipe&, const Recipe&) = default;
};

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// A finite commutative unital ring stored as dense operation tables over
/// element indices 0 .. order-1.
///
/// Immutable after construction; share it through RingPtr. Identity of the
/// host ring is pointer identity, which is what ideals and automorphisms use
/// to detect host mismatches.
class FiniteRing {
 public:
  struct Tables {
    std::size_t order = 0;
    std::vector<Elem> add;  ///< row-major order x order
    std::vector<Elem> mul;
    Elem zero = 0;
    Elem one = 0;
  };

  /// Builds a ring from raw tables after checking every ring axiom
  /// (pairs exhaustively; triples exhaustively up to order 256, sampled above).
  static RingPtr from_tables(Tables tables, Recipe recipe = Recipe{Recipe::Kind::explicit_tables, 0, {}, {}, {}});

  std::size_t order() const noexcept { return n_; }
  Elem zero() const noexcept { return zero_; }
  Elem one() const noexcept { return one_; }
  bool is_trivial() const noexcept { return n_ == 1; }

  Elem add(Elem a, Elem b) const { return add_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// k-fold additive multiple of a.
  Elem scale(Elem a, std::uint64_t k) const;

  /// Additive order of one.
  std::uint32_t characteristic() const;

  const Recipe& recipe() const noexcept { return recipe_; }

  /// Factor rings of a product ring (empty otherwise).
  const std::vector<RingPtr>& factors() const noexcept { return factors_; }
  /// Coordinates of a product-ring element, most significant factor first.
  std::vector<Elem> split(Elem a) const;
  Elem join(std::span<const Elem> coords) const;

  /// Base ring and coset representatives of a quotient ring.
  const RingPtr& quotient_base() const noexcept { return base_; }
  Elem representative(Elem a) const { return reps_.at(a); }

  /// Compact text form of an element, following the ring-file encoding.
  std::string label(Elem a) const;

 private:
  friend class RingBuilder;
  FiniteRing() = default;

  std::size_t n_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  Elem zero_ = 0;
  Elem one_ = 0;
  Recipe recipe_;
  std::vector<RingPtr> factors_;
  RingPtr base_;
  std::vector<Elem> reps_;
};

/// First violated ring law, or nullopt when the tables form a commutative
/// unital ring.
std::optional<std::string> find_axiom_violation(const FiniteRing& r, std::uint64_t seed = 0);

/// Z/nZ.
RingPtr make_cyclic(std::uint32_t n, const Bounds& bounds = {});

/// F_p[x]/(f) for a monic f given low-to-high over Z/pZ. Elements are
/// coefficient tuples with index sum c_i p^i.
RingPtr make_poly_quotient(std::uint32_t p, std::vector<std::uint32_t> f, const Bounds& bounds = {});

/// Componentwise product. Element index is mixed radix, first factor most
/// significant.
RingPtr make_product(std::span<const RingPtr> factors, const Bounds& bounds = {});
RingPtr make_product(std::initializer_list<RingPtr> factors, const Bounds& bounds = {});

bool is_prime_number(std::uint64_t n);

}  // namespace ringexp
