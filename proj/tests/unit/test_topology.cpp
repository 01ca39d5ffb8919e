#include <doctest.h>

#include "ringexp/chain.hpp"
#include "ringexp/lattice.hpp"
#include "ringexp/topology.hpp"
#include "ringexp/zariski.hpp"

using namespace ringexp;

namespace {

FiniteSpace sierpinski() {
  return FiniteSpace::from_order(2, [](std::size_t p, std::size_t q) { return p == q || (p == 0 && q == 1); });
}

}  // namespace

TEST_CASE("posets up to isomorphism") {
  const std::size_t known[] = {1, 1, 2, 5, 16, 63, 318};
  for (std::size_t n = 1; n <= 6; ++n) CHECK(enumerate_posets(n).size() == known[n]);
}

TEST_CASE("irredundant covers of a discrete space are the minimal set covers") {
  const std::size_t known[] = {1, 1, 2, 8, 49, 462, 6424};
  for (std::size_t n = 1; n <= 6; ++n) CHECK(irredundant_covers(FiniteSpace::discrete(n)).size() == known[n]);
}

TEST_CASE("Sierpinski space") {
  const auto x = sierpinski();
  CHECK(x.opens() == std::vector<PointMask>{0, 1, 3});
  CHECK(homeomorphisms(x).size() == 1);
  CHECK_THROWS(check_homeomorphism(x, SpaceMap{{1, 0}}));
  CHECK(has_minimal_cover(x).proved());
}

TEST_CASE("homeomorphisms of discrete spaces") {
  const auto x = FiniteSpace::discrete(3);
  const auto hs = homeomorphisms(x);
  CHECK(hs.size() == 6);
  for (const auto& h : hs) {
    CHECK(compose(h, inverse(h)) == identity_map(3));
    CHECK(is_positively_expansive_top(x, h).proved());
  }
}

TEST_CASE("cover operations") {
  const auto a = make_cover({1, 6});
  const auto b = make_cover({3, 4});
  const auto w = cover_wedge(a, b);
  CHECK(w == make_cover({1, 2, 4}));
  CHECK(cover_refines(w, a));
  CHECK(cover_refines(w, b));
  CHECK(is_cover(FiniteSpace::discrete(3), w));
}

TEST_CASE("spectrum of Z/6 is two closed points") {
  const IdealLattice lat(make_cyclic(6));
  const auto s = spectrum(lat);
  CHECK(s.space.size() == 2);
  CHECK(s.space.is_discrete());
  CHECK(s.maximal_points() == 3);
}

TEST_CASE("symbolic spectrum") {
  const auto s = sym_spectrum(2);
  CHECK(s.space.size() == 3);
  CHECK(s.space.leq(0, 1));
  CHECK(s.space.leq(0, 2));
  CHECK(sym_zariski_open(2, ExponentIdeal::of({1, 0})) == 5);
  CHECK(sym_zariski_open(2, ExponentIdeal::zero_ideal(2)) == 0);
  CHECK(sym_zariski_open(2, ExponentIdeal::whole(2)) == 7);
}

TEST_CASE("cube-root chain") {
  for (std::int64_t m = 1; m <= 5; ++m)
    CHECK(chain_positively_expansive(1, chain_standard_cover(), m, 2 * m + 2).proved());
  CHECK(chain_minimal_cover(4).status == Status::Refuted);
  const auto u = chain_standard_cover();
  CHECK(chain_is_cover(u));
  CHECK_FALSE(chain_refines(u, chain_minimal_certificate(u)));
}
