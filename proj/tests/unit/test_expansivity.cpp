#include <doctest.h>

#include "ringexp/certificate.hpp"
#include "ringexp/expansivity.hpp"
#include "ringexp/suites/catalog.hpp"

#include <variant>

using namespace ringexp;

TEST_CASE("identity on Z/6 is positively expansive with witness {(2),(3)}") {
  const auto r = make_cyclic(6);
  const ExpansivityEngine eng(r);
  const auto id = RingAutomorphism::identity(r);
  const auto v = eng.is_positively_expansive(id);
  REQUIRE(v.status == Status::Proved);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == GeneratorSet::make(r, {principal_ideal(r, 2), principal_ideal(r, 3)}));
  CHECK(check_certificate(cert::finite_payload(r, &id, "positive", "search", v)).ok);
}

TEST_CASE("a local ring is expansive with {R}") {
  const auto r = make_cyclic(8);
  const ExpansivityEngine eng(r);
  const auto v = eng.is_expansive(RingAutomorphism::identity(r));
  REQUIRE(v.proved());
  CHECK(v.witness->contains_whole());
  CHECK(eng.zero_expansive().proved());
}

TEST_CASE("the factor swap on F2 x F2 is expansive") {
  const auto f2 = make_cyclic(2);
  const auto r = make_product({f2, f2});
  const ExpansivityEngine eng(r);
  const auto sw = swap_factors(r, 0, 1);
  CHECK(eng.is_expansive(sw).proved());
  CHECK(eng.is_positively_expansive(sw).proved());
}

TEST_CASE("the trivial ring is degenerate") {
  const auto r = make_cyclic(1);
  const ExpansivityEngine eng(r);
  const auto v = eng.is_expansive(RingAutomorphism::identity(r));
  CHECK(v.proved());
  CHECK(v.degenerate);
}

TEST_CASE("strong minimal generator is the idempotent decomposition") {
  const auto r = make_cyclic(30);
  const ExpansivityEngine eng(r);
  const auto res = eng.strong_minimal_generator();
  REQUIRE(std::holds_alternative<LocalDecomposition>(res));
  const auto& d = std::get<LocalDecomposition>(res);
  CHECK(d.maximal_count == 3);
  CHECK(d.strong_minimal_generator.size() == 3);
  CHECK(eng.is_prec_minimal_generator(d.strong_minimal_generator));
}

TEST_CASE("tampered certificates are rejected") {
  const auto r = make_cyclic(6);
  const ExpansivityEngine eng(r);
  const auto id = RingAutomorphism::identity(r);
  auto p = cert::finite_payload(r, &id, "positive", "search", eng.is_positively_expansive(id));
  REQUIRE(check_certificate(p).ok);
  p["verdict"]["status"] = "Refuted";
  CHECK_FALSE(check_certificate(p).ok);
}

TEST_CASE("windows of every catalog automorphism are eventually periodic") {
  for (const auto& nr : suites::catalog_rings()) {
    const ExpansivityEngine eng(nr.ring, suites::suite_bounds());
    for (const auto& a : suites::automorphisms_of(nr.ring)) {
      for (auto m : eng.antichains()) {
        const auto t = eng.trace(a, m, true);
        CHECK(t.cycle_length >= 1);
        CHECK(t.windows.size() == t.cycle_start + t.cycle_length + 1);
        for (std::size_t n = 1; n < t.windows.size(); ++n)
          CHECK(eng.algebra().refines(t.windows[n], t.windows[n - 1]));
      }
    }
  }
}
