#include <benchmark/benchmark.h>

#include "eiscensus/density.hpp"

namespace {

void BM_FactorSieve(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eiscensus::FactorSieve(limit));
}
BENCHMARK(BM_FactorSieve)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_DensityConstants(benchmark::State& state) {
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  const eiscensus::FactorSieve sieve(bound);
  for (auto _ : state) benchmark::DoNotOptimize(eiscensus::density_constants(3, bound, sieve));
}
BENCHMARK(BM_DensityConstants)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

}  // namespace
