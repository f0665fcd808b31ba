#include <benchmark/benchmark.h>

#include "dipolechain/dipolechain.hpp"

using namespace dipolechain;

namespace {

ChainSpec random_chain(std::size_t n) {
  ChainSpec spec;
  spec.sequence = random_sequence(substream_seed(42, 0), n);
  return spec;
}

}  // namespace

static void BM_NumericModes(benchmark::State& state) {
  const auto v = build_coupling_matrix(random_chain(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(numeric_modes(v));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NumericModes)->RangeMultiplier(2)->Range(16, 512)->Complexity();

static void BM_AnalyticSpectrum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const double k = coupling_constant(4.5e-10);
  for (auto _ : state)
    benchmark::DoNotOptimize(analytic_spectrum(Frequency::from_peta(4.0), k, n, Direction::X));
}
BENCHMARK(BM_AnalyticSpectrum)->RangeMultiplier(4)->Range(16, 1024);

static void BM_AnalyzeChain(benchmark::State& state) {
  const auto spec = random_chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(analyze_chain(spec));
}
BENCHMARK(BM_AnalyzeChain)->Arg(17)->Arg(50)->Arg(200);

static void BM_EnsembleRecord(benchmark::State& state) {
  EnsembleParams p;
  p.n_strings = 10;
  for (auto _ : state) benchmark::DoNotOptimize(ensemble_entropy(p));
  state.SetItemsProcessed(state.iterations() * 10);
}
BENCHMARK(BM_EnsembleRecord);

static void BM_NeighborTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(neighbor_table());
}
BENCHMARK(BM_NeighborTable);
BENCHMARK_MAIN();
