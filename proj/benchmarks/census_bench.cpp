#include <benchmark/benchmark.h>

#include "eiscensus/census.hpp"
#include "eiscensus/moebius.hpp"

namespace {

const eiscensus::FactorSieve& sieve() {
  static const eiscensus::FactorSieve s(1'000'000);
  return s;
}

void BM_EnumerateCensus(benchmark::State& state) {
  const auto h = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eiscensus::enumerate_census(3, h, sieve()));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(2 * h) * (2 * h + 1) * (2 * h + 1));
}
BENCHMARK(BM_EnumerateCensus)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_ExactSetCounts(benchmark::State& state) {
  const auto h = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eiscensus::exact_set_counts(3, h, sieve()));
}
BENCHMARK(BM_ExactSetCounts)->Arg(1'000)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
