#include "common.hpp"

#include "ringexp/certificate.hpp"
#include "ringexp/symbolic.hpp"

#include <random>

namespace ringexp::suites {

using detail::finish;
using detail::make_report;
using detail::Stopwatch;

namespace {

ExponentIdeal vec(std::vector<std::uint32_t> e) { return ExponentIdeal::of(std::move(e)); }

// members drawn from Bottom and [0,b]^k
std::vector<ExponentIdeal> grid_members(std::size_t k, std::uint32_t b) {
  std::vector<ExponentIdeal> out{ExponentIdeal::zero_ideal(k)};
  std::vector<std::uint32_t> e(k, 0);
  for (;;) {
    out.push_back(vec(e));
    std::size_t i = 0;
    while (i < k && e[i] == b) e[i++] = 0;
    if (i == k) break;
    ++e[i];
  }
  return out;
}

// sum of ideals is the gcd: componentwise minimum over nonzero members
bool generates_by_min(std::size_t k, const std::vector<ExponentIdeal>& members) {
  std::vector<std::uint32_t> lo(k, ~std::uint32_t{0});
  bool any = false;
  for (const auto& m : members) {
    if (m.bottom) continue;
    any = true;
    for (std::size_t c = 0; c < k; ++c) lo[c] = std::min(lo[c], m.e[c]);
  }
  return any && std::all_of(lo.begin(), lo.end(), [](std::uint32_t x) { return x == 0; });
}

}  // namespace

SuiteReport run_criterion_gate_suite(const SuiteOptions& opt) {
  Stopwatch watch;
  auto rep = make_report(6, 60.0);
  SymOracle oracle;
  SymOracleOptions o;
  o.positive = true;
  o.n_max = 12;
  o.adversary_bound = 3;
  std::size_t tested = 0, crit_true = 0;

  auto gate = [&](const SymGenerator& g, SymOracle& orc, const SymOracleOptions& oo, const std::string& ctx) {
    ++tested;
    const bool crit = sym_identity_expansivity_criterion(g);
    crit_true += crit;
    const auto res = orc.run(g, identity_perm(g.k()), oo);
    rep.expect(crit ? res.verdict.status == Status::Proved : res.verdict.status == Status::Refuted,
               ctx + " " + g.str() + ": criterion " + (crit ? "true" : "false") + ", oracle " +
                   to_string(res.verdict.status));
    rep.keep(cert::sym_criterion_payload(g, crit), opt);
    rep.keep(cert::sym_oracle_payload(g, oo, res), opt);
    return crit;
  };

  for (std::size_t k = 1; k <= 3; ++k) {
    const auto items = grid_members(k, 2);
    const std::size_t n = items.size();
    auto try_set = [&](std::vector<ExponentIdeal> m) {
      if (sym_is_generator(k, m)) gate(SymGenerator::make(k, std::move(m)), oracle, o, "grid k=" + std::to_string(k));
    };
    for (std::size_t a = 0; a < n; ++a) {
      try_set({items[a]});
      for (std::size_t b = a + 1; b < n; ++b) {
        try_set({items[a], items[b]});
        for (std::size_t c = b + 1; c < n; ++c) try_set({items[a], items[b], items[c]});
      }
    }
  }

  rep.expect(gate(SymGenerator::make(2, {vec({1, 0}), vec({0, 1})}), oracle, o, "anchor"),
             "anchor k=2 {(1,0),(0,1)} must satisfy the criterion");
  rep.expect(!gate(SymGenerator::make(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})}), oracle, o, "anchor"),
             "anchor k=3 unit vectors must fail the criterion");
  rep.expect(gate(sym_complementary(3), oracle, o, "anchor"), "anchor k=3 complementary family must pass");

  // complementary family for k <= 4; k = 4 uses adversary exponents <= 1 (grid of 16 points)
  for (std::size_t k = 1; k <= 4; ++k) {
    SymOracleOptions ok = o;
    if (k == 4) ok.adversary_bound = 1;
    SymOracle local;
    rep.expect(gate(sym_complementary(k), local, ok, "complementary"),
               "complementary family fails for k=" + std::to_string(k));
  }
  rep.note(std::to_string(tested) + " generators, " + std::to_string(crit_true) + " satisfy the criterion, " +
           std::to_string(oracle.distinct_window_classes()) + " distinct window classes");
  finish(rep, watch);
  return rep;
}

SuiteReport run_semilocal_suite(const SuiteOptions& opt) {
  Stopwatch watch;
  auto rep = make_report(7);
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> size_dist(1, 4);
  std::uniform_int_distribution<std::uint32_t> exp_dist(0, 3);
  std::bernoulli_distribution bottom(0.125);
  std::size_t generating = 0;
  for (int t = 0; t < 1000; ++t) {
    std::vector<ExponentIdeal> m;
    const std::size_t s = size_dist(rng);
    for (std::size_t i = 0; i < s; ++i)
      m.push_back(bottom(rng) ? ExponentIdeal::zero_ideal(2) : vec({exp_dist(rng), exp_dist(rng)}));
    const bool expected = generates_by_min(2, m);
    generating += expected;
    rep.expect(sym_is_generator(2, m) == expected, "random set #" + std::to_string(t) + ": " + SymGenerator(2, m).str());
  }
  rep.note(std::to_string(generating) + " of 1000 random sets generate (seed " + std::to_string(opt.seed) + ")");

  const auto none = sym_minimal_generator_exists(2);
  rep.expect(none.status == Status::Refuted, "k=2 minimal generator not refuted");
  auto certify = [&](const SymGenerator& c) {
    const auto cert_gen = sym_minimal_certificate(c);
    rep.expect(sym_is_generator(cert_gen) && !sym_refines(c, cert_gen),
               c.str() + ": certificate " + cert_gen.str() + " is refined or does not generate");
    rep.keep(cert::sym_minimal_payload(2, c, cert_gen), opt);
    return cert_gen;
  };
  if (none.candidate) certify(*none.candidate);
  const auto pool = SymAdversaryPool::get(2, 3);
  for (std::size_t j = 0; j < pool->size(); ++j) certify(pool->adversary(j));
  const auto anchor = certify(SymGenerator::make(2, {vec({1, 0}), vec({0, 1})}));
  rep.expect(anchor == SymGenerator::make(2, {vec({2, 0}), vec({0, 2})}), "anchor certificate is not {(2,0),(0,2)}");

  const auto one = sym_minimal_generator_exists(1);
  rep.expect(one.status == Status::Proved, "k=1 minimal generator not proved");
  rep.keep(cert::sym_minimal_payload(1, *one.witness, *one.witness), opt);

  const auto id = sym_expansivity(2, identity_perm(2), true);
  rep.expect(id.proved() && id.exact, "identity on k=2 not proved positively expansive");
  if (id.witness) {
    SymOracleOptions o;
    const auto res = SymOracle().run(*id.witness, identity_perm(2), o);
    rep.expect(res.verdict.proved(), "oracle disagrees on the k=2 identity witness");
    rep.keep(cert::sym_oracle_payload(*id.witness, o, res), opt);
  }
  const auto swap = sym_expansivity(2, CoordPerm{1, 0}, true);
  rep.note(std::string("swap on k=2, positive, tested grid: ") + to_string(swap.status));
  finish(rep, watch);
  return rep;
}

}  // namespace ringexp::suites
