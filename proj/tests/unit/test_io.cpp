#include <doctest.h>

#include "ringexp/errors.hpp"
#include "ringexp/io/dot.hpp"
#include "ringexp/io/json.hpp"
#include "ringexp/io/ring_file.hpp"
#include "ringexp/isomorphism.hpp"
#include "ringexp/lattice.hpp"
#include "ringexp/suites/catalog.hpp"
#include "ringexp/zariski.hpp"

using namespace ringexp;
using nlohmann::json;

TEST_CASE("ring documents round trip") {
  for (const auto& nr : suites::catalog_rings()) {
    const auto back = io::ring_from_json(io::ring_to_json(*nr.ring));
    CHECK(back->order() == nr.ring->order());
    CHECK(are_isomorphic(*back, *nr.ring));
  }
}

TEST_CASE("ring documents") {
  CHECK(io::ring_from_json(json::parse(R"({"kind":"cyclic","n":6})"))->order() == 6);
  CHECK(io::ring_from_json(json::parse(R"({"kind":"poly_quotient","p":3,"coeffs":[1,0,1]})"))->order() == 9);
  const auto q = io::ring_from_json(json::parse(R"({"kind":"quotient","base":{"kind":"cyclic","n":12},"ideal_generators":[4]})"));
  CHECK(are_isomorphic(*q, *make_cyclic(4)));
  CHECK(io::semilocal_rank(json::parse(R"({"kind":"semilocal","k":3})")) == 3);
  CHECK_THROWS_AS(io::ring_from_json(json::parse(R"({"kind":"cyclic"})")), Error);
  CHECK_THROWS_AS(io::ring_from_json(json::parse(R"({"kind":"poly_quotient","p":4,"coeffs":[1,1]})")), Error);
}

TEST_CASE("automorphism documents") {
  const auto f4 = make_poly_quotient(2, {1, 1, 1});
  CHECK(io::automorphism_from_json(f4, "frobenius").order() == 2);
  CHECK(io::automorphism_from_json(f4, "identity").is_identity());
  const auto r = make_product({make_cyclic(2), make_cyclic(2)});
  const auto sw = io::automorphism_from_json(r, "swap:0,1");
  CHECK(io::automorphism_from_json(r, io::automorphism_json(sw)).compose(sw).is_identity());
}

TEST_CASE("spectrum DOT output of Z/6 has two nodes and no edges") {
  const IdealLattice lat(make_cyclic(6));
  const auto dot = io::space_dot(spectrum(lat).space);
  CHECK(dot.find("->") == std::string::npos);
  std::size_t nodes = 0;
  for (std::size_t at = dot.find("label="); at != std::string::npos; at = dot.find("label=", at + 1)) ++nodes;
  CHECK(nodes == 2);
}

TEST_CASE("table digest ignores entry order") {
  std::vector<std::pair<json, std::size_t>> a{{json::array({1}), 0}, {json::array({2}), 3}};
  auto b = a;
  std::swap(b[0], b[1]);
  CHECK(io::table_digest(a) == io::table_digest(b));
  b[0].second = 4;
  CHECK(io::table_digest(a) != io::table_digest(b));
}
