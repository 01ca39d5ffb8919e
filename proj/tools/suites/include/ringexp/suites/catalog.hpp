#pragma once

#include "ringexp/automorphism.hpp"
#include "ringexp/bounds.hpp"
#include "ringexp/ring.hpp"

#include <string>
#include <vector>

namespace ringexp::suites {

struct NamedRing {
  std::string name;
  RingPtr ring;
};

/// Bounds used across the suites: automorphisms are enumerated up to order 64.
Bounds suite_bounds();

/// Fields, local rings and products, all with at most 24 ideals.
std::vector<NamedRing> catalog_rings();
/// Z/n for lo <= n <= hi.
std::vector<NamedRing> cyclic_rings(std::uint32_t lo, std::uint32_t hi);
/// catalog_rings() followed by Z/2 .. Z/hi.
std::vector<NamedRing> catalog_with_cyclic(std::uint32_t hi);

/// Z/n[x_1..x_m] modulo every monomial of total degree >= d and q x_i = 0,
/// for q dividing n.
RingPtr truncated_polynomials(std::uint32_t n, std::uint32_t q, std::size_t vars, std::size_t d);
/// Z/n[x]/(f) for a monic f given low to high.
RingPtr polynomials_mod(std::uint32_t n, std::vector<std::uint32_t> f);

/// One ring per isomorphism class of commutative unital rings of order
/// 2..max_order (max_order <= 16): local rings come from Z/n, F_p[x]/(f),
/// Galois rings and quotients of truncated polynomial rings; the rest are
/// products of those.
std::vector<NamedRing> small_ring_corpus(std::size_t max_order = 16);
/// Number of isomorphism classes of commutative unital rings of order n <= 16.
std::size_t known_ring_count(std::size_t n);

std::vector<RingAutomorphism> automorphisms_of(const RingPtr& r);

}  // namespace ringexp::suites
