// Serial reference vs OpenMP subset scans on the product graphs the checks use.

#include <benchmark/benchmark.h>

#include "wfc/families.hpp"
#include "wfc/kernels.hpp"
#include "wfc/product.hpp"

namespace {

using namespace wfc;

Graph bench_graph(int which) {
  switch (which) {
    case 0: return lexicographic(generate(parse_family("path:4")), Graph::empty(4)).graph;   // 16
    case 1: return lexicographic(generate(parse_family("cycle:5")), generate(parse_family("cycle:4"))).graph;  // 20
    default: return lexicographic(generate(parse_family("cycle:6")), generate(parse_family("cycle:4"))).graph;  // 24
  }
}

void BM_ForestsSerial(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::maximal_forests_serial(g));
  state.SetLabel("n=" + std::to_string(g.order()));
}

void BM_ForestsParallel(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::maximal_forests_parallel(g));
  state.SetLabel("n=" + std::to_string(g.order()));
}

void BM_IndependentSerial(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::maximal_independent_serial(g));
}

void BM_IndependentParallel(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::maximal_independent_parallel(g));
}

void BM_ForestNumberDescending(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::max_forest_order_descending(g));
}

}  // namespace

BENCHMARK(BM_ForestsSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ForestsParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IndependentSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IndependentParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ForestNumberDescending)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
