#include <random>

#include <benchmark/benchmark.h>

#include "binmms/cover_cardinal.hpp"
#include "binmms/cover_ordinal.hpp"
#include "binmms/harness/generators.hpp"
#include "binmms/harness/lone_divider.hpp"
#include "binmms/matching.hpp"
#include "binmms/mms.hpp"
#include "binmms/pack_ordinal.hpp"
#include "binmms/valuation.hpp"

using namespace binmms;
using namespace binmms::harness;

namespace {

Instance fixedInstance(std::int64_t n, std::int64_t m, std::uint64_t seed = 42) {
  GeneratorSpec spec;
  spec.n = n;
  spec.m = m;
  spec.seed = seed;
  return generate(spec);
}

void BM_CoveringValue(benchmark::State& state) {
  const Instance inst = fixedInstance(1, state.range(0));
  const Bundle all = allItems(inst.itemCount());
  for (auto _ : state) benchmark::DoNotOptimize(coveringValue(inst, 0, all).value);
}
BENCHMARK(BM_CoveringValue)->DenseRange(8, 20, 4);

void BM_PackingCost(benchmark::State& state) {
  const Instance inst = fixedInstance(1, state.range(0));
  const Bundle all = allItems(inst.itemCount());
  for (auto _ : state) benchmark::DoNotOptimize(packingCost(inst, 0, all).cost);
}
BENCHMARK(BM_PackingCost)->DenseRange(8, 20, 4);

void BM_MmsCover(benchmark::State& state) {
  const Instance inst = fixedInstance(3, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mmsCover(inst, 0).kappa);
}
BENCHMARK(BM_MmsCover)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_EnvyFreeMatching(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::bernoulli_distribution edge(0.3);
  BipartiteGraph g(side, side);
  for (std::size_t a = 0; a < side; ++a)
    for (std::size_t p = 0; p < side; ++p)
      if (edge(rng)) g.addEdge(a, p);
  for (auto _ : state) benchmark::DoNotOptimize(maxCardinalityEnvyFreeMatching(g).size());
}
BENCHMARK(BM_EnvyFreeMatching)->RangeMultiplier(4)->Range(8, 512);

void BM_SolveCoverCardinal(benchmark::State& state) {
  const Instance inst = fixedInstance(3, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solveCoverCardinal(inst).allocation);
}
BENCHMARK(BM_SolveCoverCardinal)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

void BM_LoneDividerFixture(benchmark::State& state) {
  GeneratorSpec spec;
  spec.family = Family::LoneDivider;
  const Instance fx = generate(spec);
  const auto certs = loneDividerCertificates(fx);
  for (auto _ : state) benchmark::DoNotOptimize(solveCoverCardinal(fx, &certs).allocation);
}
BENCHMARK(BM_LoneDividerFixture)->Unit(benchmark::kMillisecond);

void BM_CoverConstruct(benchmark::State& state) {
  const Instance inst = fixedInstance(1, state.range(0));
  const Instance ido = toIdo(inst).idoInstance;
  const Bundle all = allItems(inst.itemCount());
  for (auto _ : state) benchmark::DoNotOptimize(coverConstruct(ido.row(0), all, 8).covered);
}
BENCHMARK(BM_CoverConstruct)->RangeMultiplier(4)->Range(16, 1024);

void BM_RunPackOrdinal(benchmark::State& state) {
  const Instance ido = toIdo(fixedInstance(8, state.range(0))).idoInstance;
  for (auto _ : state) benchmark::DoNotOptimize(runPackOrdinal(ido).allocation);
}
BENCHMARK(BM_RunPackOrdinal)->RangeMultiplier(4)->Range(16, 1024);

void BM_PackConstruct(benchmark::State& state) {
  const Instance ido = toIdo(fixedInstance(1, state.range(0))).idoInstance;
  const Bundle all = allItems(ido.itemCount());
  const auto kappa = firstFitDecreasing(ido.row(0), all).bins.size();
  for (auto _ : state) benchmark::DoNotOptimize(packConstruct(ido.row(0), all, kappa).bins);
}
BENCHMARK(BM_PackConstruct)->RangeMultiplier(4)->Range(16, 1024);

}  // namespace

BENCHMARK_MAIN();
