#include <doctest.h>

#include "ringexp/automorphism.hpp"
#include "ringexp/errors.hpp"
#include "ringexp/ideal.hpp"
#include "ringexp/isomorphism.hpp"
#include "ringexp/lattice.hpp"
#include "ringexp/ring.hpp"
#include "ringexp/suites/catalog.hpp"

#include <numeric>

using namespace ringexp;

namespace {

std::size_t divisor_count(std::uint32_t n) {
  std::size_t c = 0;
  for (std::uint32_t d = 1; d <= n; ++d) c += n % d == 0;
  return c;
}

}  // namespace

TEST_CASE("cyclic rings satisfy the axioms and have one ideal per divisor") {
  for (std::uint32_t n = 1; n <= 40; ++n) {
    const auto r = make_cyclic(n);
    CHECK(r->order() == n);
    CHECK_FALSE(find_axiom_violation(*r).has_value());
    CHECK(enumerate_ideals(r).size() == divisor_count(n));
  }
}

TEST_CASE("broken tables are rejected") {
  FiniteRing::Tables t;
  t.order = 2;
  t.add = {0, 1, 1, 0};
  t.mul = {0, 0, 0, 0};  // no unit
  t.zero = 0;
  t.one = 1;
  CHECK_THROWS_AS(FiniteRing::from_tables(t), ValidationError);
}

TEST_CASE("lattice enumeration matches the subgroup brute force") {
  std::vector<RingPtr> rings;
  for (const auto& nr : suites::catalog_rings())
    if (nr.ring->order() <= 32) rings.push_back(nr.ring);
  for (const auto& nr : suites::small_ring_corpus(16)) rings.push_back(nr.ring);
  for (const auto& r : rings) {
    auto fast = enumerate_ideals(r);
    auto slow = enumerate_ideals_brute_force(r);
    std::sort(fast.begin(), fast.end());
    std::sort(slow.begin(), slow.end());
    CHECK(fast == slow);
  }
}

TEST_CASE("Z/6 decomposes along the idempotents 3 and 4") {
  const auto r = make_cyclic(6);
  CHECK(primitive_orthogonal_idempotents(*r) == std::vector<Elem>{3, 4});
  CHECK(maximal_ideals(r).size() == 2);
  const IdealLattice lat(r);
  CHECK(lat.size() == 4);
  CHECK(lat.primes().size() == 2);
}

TEST_CASE("automorphism groups of small fields and products") {
  CHECK(enumerate_automorphisms(make_cyclic(12)).size() == 1);
  CHECK(enumerate_automorphisms(make_poly_quotient(2, {1, 1, 1})).size() == 2);
  CHECK(enumerate_automorphisms(make_poly_quotient(2, {1, 1, 0, 1})).size() == 3);
  const auto f2 = make_cyclic(2);
  CHECK(enumerate_automorphisms(make_product({f2, f2, f2})).size() == 6);
  const auto f4 = make_poly_quotient(2, {1, 1, 1});
  const auto fr = frobenius(f4);
  CHECK(fr.order() == 2);
  CHECK(fr.power(2).is_identity());
  CHECK(fr.compose(fr.inverse()).is_identity());
}

TEST_CASE("invalid automorphisms name the broken law") {
  const auto r = make_cyclic(5);
  CHECK_THROWS_AS(RingAutomorphism::make(r, {0, 2, 4, 1, 3}), ValidationError);  // x -> 2x is not unital
}

TEST_CASE("isomorphism testing") {
  const auto f2 = make_cyclic(2);
  CHECK(are_isomorphic(*make_poly_quotient(2, {0, 1, 1}), *make_product({f2, f2})));
  CHECK_FALSE(are_isomorphic(*make_poly_quotient(2, {0, 0, 1}), *make_cyclic(4)));
  CHECK(are_isomorphic(*make_product({make_cyclic(2), make_cyclic(3)}), *make_cyclic(6)));
  CHECK(are_isomorphic(*suites::polynomials_mod(3, {0, 1}), *make_cyclic(3)));
}

TEST_CASE("truncated polynomial rings") {
  const auto r = suites::truncated_polynomials(2, 2, 2, 2);  // F2[x,y]/(x,y)^2
  CHECK(r->order() == 8);
  CHECK(maximal_ideals(r).size() == 1);
  CHECK(enumerate_ideals(r).size() == 6);  // 0, three lines in m, m, R
  const auto gr = suites::polynomials_mod(4, {1, 1, 1});
  CHECK(gr->order() == 16);
  CHECK(enumerate_ideals(gr).size() == 3);  // 0, (2), R
}

TEST_CASE("order-16 corpus has one ring per isomorphism class") {
  const auto corpus = suites::small_ring_corpus(16);
  CHECK(corpus.size() == 69);
}

TEST_CASE("capacity bounds") {
  Bounds b;
  b.max_order = 100;
  CHECK_THROWS_AS(make_cyclic(101, b), CapacityError);
}
