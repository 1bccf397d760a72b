// Serial vs OpenMP state sum vs transfer sweep on random plat diagrams.

#include <random>

#include <benchmark/benchmark.h>

#include "platkit/plat.hpp"

namespace {

platkit::PlatDiagram sample(int strands, int crossings) {
  std::mt19937_64 rng(1234 + strands * 97 + crossings);
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::vector<int> letters;
  while (static_cast<int>(letters.size()) < crossings) {
    const int g = rng() % 2 ? gen(rng) : -gen(rng);
    if (!letters.empty() && letters.back() == -g) continue;  // keep the crossing count honest
    letters.push_back(g);
  }
  return platkit::plat_close(platkit::BraidWord(strands, letters));
}

void BM_StateSumSerial(benchmark::State& state) {
  const auto d = sample(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(platkit::kernels::bracket_state_sum_serial(d));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(1)));
}

void BM_StateSumParallel(benchmark::State& state) {
  const auto d = sample(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(platkit::kernels::bracket_state_sum_parallel(d));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(1)));
}

void BM_Transfer(benchmark::State& state) {
  const auto d = sample(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(platkit::kernels::bracket_transfer(d));
}

void sizes(benchmark::internal::Benchmark* b) {
  for (int strands : {4, 6, 8}) {
    for (int c : {10, 14, 18}) b->Args({strands, c});
  }
}

}  // namespace

BENCHMARK(BM_StateSumSerial)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StateSumParallel)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Transfer)->Apply(sizes)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
