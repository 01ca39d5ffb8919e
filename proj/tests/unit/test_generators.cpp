#include <doctest.h>

#include "ringexp/expansivity.hpp"
#include "ringexp/generators.hpp"
#include "ringexp/lattice.hpp"
#include "ringexp/suites/catalog.hpp"

using namespace ringexp;

TEST_CASE("mask algebra agrees with the ideal-level calculus") {
  for (const auto& nr : suites::catalog_with_cyclic(24)) {
    const IdealLattice lat(nr.ring);
    if (lat.size() > 16) continue;
    const MaskAlgebra alg(lat);
    const auto gens = enumerate_generators(lat, true);
    CHECK(gens.size() == alg.antichain_generators().size());
    for (const auto& a : gens) {
      const auto ma = alg.to_mask(a);
      CHECK(alg.to_set(ma) == a);
      CHECK(alg.is_generator(ma));
      for (const auto& b : gens) {
        const auto mb = alg.to_mask(b);
        CHECK(refines(a, b) == alg.refines(ma, mb));
        CHECK(alg.to_set(alg.normalize(alg.product(ma, mb))) == normalize_antichain(gen_product(a, b)));
      }
    }
  }
}

TEST_CASE("generator basics on Z/6") {
  const auto r = make_cyclic(6);
  const auto g = GeneratorSet::make(r, {principal_ideal(r, 2), principal_ideal(r, 3)});
  CHECK(g.size() == 2);
  CHECK_THROWS(GeneratorSet::make(r, {principal_ideal(r, 2), principal_ideal(r, 4)}));
  const auto whole = GeneratorSet::make(r, {whole_ideal(r)});
  CHECK(refines(g, whole));
  CHECK_FALSE(refines(whole, g));
  CHECK(gen_power(g, 0) == whole);
  CHECK(normalize_antichain(gen_power(g, 3)) == g);  // (2),(3) idempotent-generated
  CHECK(is_antichain(g));
}

TEST_CASE("refinement is a preorder and products refine their factors") {
  const auto r = make_cyclic(12);
  const IdealLattice lat(r);
  const auto gens = enumerate_generators(lat, false);
  for (const auto& a : gens) {
    CHECK(refines(a, a));
    for (const auto& b : gens) {
      const auto ab = gen_product(a, b);
      CHECK(refines(ab, a));
      CHECK(refines(ab, b));
    }
  }
}
