#include <benchmark/benchmark.h>

#include "harmonic/classify.hpp"
#include "harmonic/invariants.hpp"

using namespace harmonic;

static void BM_EnumerateCrossings(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  auto K = HarmonicTriple::make(2 * n - 1, 2 * n, 2 * n + 1);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_crossings(K));
  state.counters["crossings"] = static_cast<double>(K.crossing_count());
}
BENCHMARK(BM_EnumerateCrossings)->DenseRange(2, 8, 2);

static void BM_AlexanderFamily(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  auto gc = build_gauss_code(HarmonicTriple::make(2 * n - 1, 2 * n, 2 * n + 1));
  for (auto _ : state) benchmark::DoNotOptimize(alexander(gc));
  state.counters["crossings"] = static_cast<double>(gc.crossing_count());
}
BENCHMARK(BM_AlexanderFamily)->DenseRange(2, 8, 1)->Unit(benchmark::kMillisecond);

static void BM_Expand1212(benchmark::State& state) {
  // [1, 2, 1, 2, ...] with state.range(0) pairs; alpha odd and beta even by construction.
  SignedCF cf;
  for (int i = 0; i < state.range(0); ++i) cf.terms.insert(cf.terms.end(), {1, 2});
  Fraction f = Fraction::from_rational(evaluate(cf));
  for (auto _ : state) benchmark::DoNotOptimize(expand_1212(f));
  state.counters["terms"] = static_cast<double>(cf.size());
}
BENCHMARK(BM_Expand1212)->Arg(4)->Arg(16)->Arg(64);

static void BM_Table(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& K : table_triples(state.range(0))) benchmark::DoNotOptimize(analyze(K));
  }
}
BENCHMARK(BM_Table)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
