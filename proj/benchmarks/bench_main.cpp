#include <benchmark/benchmark.h>

#include "ringexp/chain.hpp"
#include "ringexp/expansivity.hpp"
#include "ringexp/lattice.hpp"
#include "ringexp/symbolic.hpp"
#include "ringexp/topology.hpp"
#include "ringexp/suites/catalog.hpp"

using namespace ringexp;

static void BM_LatticeCyclic(benchmark::State& st) {
  const auto r = make_cyclic(static_cast<std::uint32_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(IdealLattice(r).size());
}
BENCHMARK(BM_LatticeCyclic)->Arg(60)->Arg(360)->Arg(2310);

static void BM_LatticeF2Cube(benchmark::State& st) {
  const auto f2 = make_cyclic(2);
  const auto r = make_product({f2, f2, f2, f2});
  for (auto _ : st) benchmark::DoNotOptimize(IdealLattice(r).size());
}
BENCHMARK(BM_LatticeF2Cube);

static void BM_EngineSetup(benchmark::State& st) {
  const auto r = make_cyclic(static_cast<std::uint32_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(ExpansivityEngine(r).antichains().size());
}
BENCHMARK(BM_EngineSetup)->Arg(30)->Arg(210);

static void BM_PositiveSearch(benchmark::State& st) {
  const auto f2 = make_cyclic(2);
  const auto r = make_product({f2, f2, f2});
  const ExpansivityEngine eng(r);
  const auto alpha = suites::automorphisms_of(r).back();
  for (auto _ : st) benchmark::DoNotOptimize(eng.is_positively_expansive(alpha).status);
}
BENCHMARK(BM_PositiveSearch);

static void BM_WindowTrace(benchmark::State& st) {
  const auto r = make_cyclic(210);
  const ExpansivityEngine eng(r);
  const auto id = RingAutomorphism::identity(r);
  for (auto _ : st)
    for (auto m : eng.antichains()) benchmark::DoNotOptimize(eng.trace(id, m, true).cycle_length);
}
BENCHMARK(BM_WindowTrace);

static void BM_SymOracle(benchmark::State& st) {
  const auto k = static_cast<std::size_t>(st.range(0));
  const auto g = sym_complementary(k);
  for (auto _ : st) {
    SymOracle oracle;
    benchmark::DoNotOptimize(oracle.run(g, identity_perm(k), {}).verdict.status);
  }
}
BENCHMARK(BM_SymOracle)->Arg(2)->Arg(3);

static void BM_IrredundantCovers(benchmark::State& st) {
  const auto x = FiniteSpace::discrete(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(irredundant_covers(x).size());
}
BENCHMARK(BM_IrredundantCovers)->Arg(4)->Arg(5)->Arg(6);

static void BM_Posets(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_posets(static_cast<std::size_t>(st.range(0))).size());
}
BENCHMARK(BM_Posets)->Arg(5)->Arg(6);

static void BM_ChainSweep(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(chain_positive_sweep(-1, 8, 18).status);
}
BENCHMARK(BM_ChainSweep);
BENCHMARK_MAIN();
