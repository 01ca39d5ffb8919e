#include <doctest.h>

#include "ringexp/symbolic.hpp"

#include <numeric>
#include <random>

using namespace ringexp;

namespace {

// (p_1^a_1 ... p_k^a_k) as an integer for the primes 2, 3, 5; zero ideal as 0.
std::uint64_t as_int(const ExponentIdeal& i) {
  static constexpr std::uint64_t primes[] = {2, 3, 5};
  if (i.bottom) return 0;
  std::uint64_t v = 1;
  for (std::size_t j = 0; j < i.k(); ++j)
    for (std::uint32_t t = 0; t < i.e[j]; ++t) v *= primes[j];
  return v;
}

bool divides(std::uint64_t a, std::uint64_t b) { return a == 0 ? b == 0 : b % a == 0; }

}  // namespace

TEST_CASE("ideal arithmetic matches gcd, product and divisibility") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint32_t> ex(0, 4);
  for (int trial = 0; trial < 2000; ++trial) {
    auto pick = [&] {
      if (ex(rng) == 0 && ex(rng) < 2) return ExponentIdeal::zero_ideal(3);
      return ExponentIdeal::of({ex(rng), ex(rng), ex(rng)});
    };
    const auto a = pick(), b = pick();
    CHECK(as_int(sym_sum(a, b)) == std::gcd(as_int(a), as_int(b)));
    CHECK(as_int(sym_product(a, b)) == as_int(a) * as_int(b));
    // I contained in J iff the generator of J divides the generator of I
    CHECK(sym_contains(a, b) == divides(as_int(b), as_int(a)));
  }
}

TEST_CASE("primes and maximals") {
  CHECK(sym_primes(3).size() == 4);
  CHECK(sym_is_prime(ExponentIdeal::zero_ideal(2)));
  CHECK_FALSE(sym_is_maximal(ExponentIdeal::zero_ideal(2)));
  CHECK(sym_is_maximal(ExponentIdeal::of({0, 1})));
  CHECK_FALSE(sym_is_prime(ExponentIdeal::of({1, 1})));
  CHECK(sym_radical(ExponentIdeal::of({3, 0, 2})) == ExponentIdeal::of({1, 0, 1}));
}

TEST_CASE("no minimal generator for k >= 2") {
  CHECK(sym_minimal_generator_exists(1).proved());
  for (std::size_t k = 2; k <= 4; ++k) CHECK(sym_minimal_generator_exists(k).status == Status::Refuted);
  const auto cand = SymGenerator::make(2, {ExponentIdeal::of({1, 0}), ExponentIdeal::of({0, 1})});
  const auto c = sym_minimal_certificate(cand);
  CHECK(c == SymGenerator::make(2, {ExponentIdeal::of({2, 0}), ExponentIdeal::of({0, 2})}));
  CHECK_FALSE(sym_refines(cand, c));
}

TEST_CASE("identity criterion") {
  using E = ExponentIdeal;
  CHECK(sym_identity_expansivity_criterion(SymGenerator::make(1, {E::whole(1)})));
  CHECK_FALSE(sym_identity_expansivity_criterion(SymGenerator::make(2, {E::whole(2)})));
  CHECK(sym_identity_expansivity_criterion(SymGenerator::make(2, {E::of({1, 0}), E::of({0, 1})})));
  CHECK_FALSE(sym_identity_expansivity_criterion(SymGenerator::make(2, {E::of({1, 0}), E::whole(2)})));
  CHECK(sym_identity_expansivity_criterion(sym_complementary(3)));
  CHECK_THROWS(sym_identity_expansivity_criterion(SymGenerator(2, {E::of({1, 1})})));
}

TEST_CASE("adversary pool sizes") {
  // antichains of the grid [0,b]^k that generate
  CHECK(SymAdversaryPool::get(1, 3)->size() == 1);
  CHECK(SymAdversaryPool::get(2, 1)->size() == 2);  // {R}, {(1,0),(0,1)}
}

TEST_CASE("oracle agrees with the criterion for the identity") {
  using E = ExponentIdeal;
  SymOracle oracle;
  const auto good = SymGenerator::make(2, {E::of({1, 0}), E::of({0, 1})});
  const auto bad = SymGenerator::make(2, {E::of({1, 0}), E::of({0, 1}), E::whole(2)});
  CHECK(oracle.run(good, identity_perm(2), {}).verdict.proved());
  CHECK_FALSE(oracle.run(bad, identity_perm(2), {}).verdict.proved());
}
