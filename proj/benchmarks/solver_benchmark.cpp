#include <benchmark/benchmark.h>

#include <random>

#include "paper_instance.hpp"
#include "random_market.hpp"
#include "sugartax/optimizer.hpp"
#include "sugartax/oracle.hpp"

namespace {

using namespace sugartax;

Market market_with(std::size_t consumers, std::size_t products) {
  std::mt19937_64 rng(consumers * 131 + products);
  return testing::random_market(rng, {.min_consumers = consumers, .max_consumers = consumers, .products = products});
}

void BM_EnumerateCola(benchmark::State& state) {
  const Market m = testing::cola_market();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_candidates(m));
}
BENCHMARK(BM_EnumerateCola);

void BM_EnumerateTwoProducts(benchmark::State& state) {
  const Market m = market_with(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_candidates(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateTwoProducts)->RangeMultiplier(2)->Range(2, 32)->Complexity();

void BM_EnumerateThreeProducts(benchmark::State& state) {
  const Market m = market_with(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_candidates(m, {static_cast<unsigned>(state.range(1))}));
}
BENCHMARK(BM_EnumerateThreeProducts)->Args({4, 1})->Args({8, 1})->Args({8, 4});

void BM_OptimizeCola(benchmark::State& state) {
  const Market m = testing::cola_market();
  const CandidateSet c = enumerate_candidates(m);
  for (auto _ : state) benchmark::DoNotOptimize(optimize(m, c, WelfareMode::tax_double_counted));
}
BENCHMARK(BM_OptimizeCola);

void BM_OptimizeTwoProducts(benchmark::State& state) {
  const Market m = market_with(static_cast<std::size_t>(state.range(0)), 2);
  const CandidateSet c = enumerate_candidates(m);
  for (auto _ : state) benchmark::DoNotOptimize(optimize(m, c, WelfareMode::definition));
}
BENCHMARK(BM_OptimizeTwoProducts)->RangeMultiplier(2)->Range(2, 16);

void BM_GridBestResponseCola(benchmark::State& state) {
  const Market m = testing::cola_market();
  const CandidateSet c = enumerate_candidates(m);
  GridSpec g = default_grid(m, c);
  g.price_step = ratio(1, 20);
  for (auto _ : state) benchmark::DoNotOptimize(grid_best_response(m, TaxRate::zero(), g, c));
}
BENCHMARK(BM_GridBestResponseCola)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
