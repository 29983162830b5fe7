#include <benchmark/benchmark.h>

#include "smirnov/qengine.hpp"

namespace {

// Contents of growing size; the last few are where threading starts to pay.
const std::vector<std::vector<int>> kContents = {
    {2, 2, 1}, {2, 2, 2}, {3, 2, 2}, {2, 2, 2, 1}, {3, 3, 2}, {2, 2, 2, 2},
};

void BM_EnumerateSerial(benchmark::State& state) {
  const smirnov::WeakComposition mu(kContents.at(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(smirnov::enumerative_table_serial(mu, smirnov::Statistic::sminv));
  state.SetLabel(mu.to_string());
}

void BM_EnumerateParallel(benchmark::State& state) {
  const smirnov::WeakComposition mu(kContents.at(static_cast<std::size_t>(state.range(0))));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(smirnov::enumerative_table(mu, smirnov::Statistic::sminv, threads));
  state.SetLabel(mu.to_string() + " threads=" + std::to_string(threads));
}

void BM_RecursionColdMemo(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    smirnov::SfCoefficientTable table;
    benchmark::DoNotOptimize(smirnov::sf_h_coefficient(n, 1, 1, smirnov::WeakComposition(std::vector<int>(static_cast<std::size_t>(n), 1)), table));
  }
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->ArgsProduct({benchmark::CreateDenseRange(0, 5, 1), {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RecursionColdMemo)->DenseRange(4, 9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
