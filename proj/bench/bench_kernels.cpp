// Serial reference versus OpenMP kernels. Run with --benchmark_filter to pick
// a kernel; set OMP_NUM_THREADS or ISO_LAB_THREADS to vary the worker count.

#include <benchmark/benchmark.h>

#include <vector>

#include "isolab/bounds.hpp"
#include "isolab/kernels.hpp"

namespace {

using namespace isolab;

const SmallGraph& johnson_6_3() {
  static const SmallGraph g = johnson_small_graph(6, 3);
  return g;
}

void BM_VertexProfileSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(vertex_profile_scan_serial(johnson_6_3()));
}
void BM_VertexProfileParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(vertex_profile_scan(johnson_6_3()));
}

void BM_CountBelowSerial(benchmark::State& state) {
  const std::vector<double> lb(21, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(count_below_bound_serial(johnson_6_3(), lb, 1e-12));
}
void BM_CountBelowParallel(benchmark::State& state) {
  const std::vector<double> lb(21, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(count_below_bound(johnson_6_3(), lb, 1e-12));
}

void BM_CombinationSerial(benchmark::State& state) {
  const SmallGraph g = johnson_small_graph(7, 2);
  for (auto _ : state) benchmark::DoNotOptimize(combination_min_boundary_serial(g, static_cast<int>(state.range(0))));
}
void BM_CombinationParallel(benchmark::State& state) {
  const SmallGraph g = johnson_small_graph(7, 2);
  for (auto _ : state) benchmark::DoNotOptimize(combination_min_boundary(g, static_cast<int>(state.range(0))));
}

void BM_CubeScanSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cube_exhaustive_scan_serial(4, 1e-12));
}
void BM_CubeScanParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cube_exhaustive_scan(4, 1e-12));
}

void BM_Prop3Serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(prop3_scan_serial({4, 64, 64, 64, 0.2, 1e-12}));
}
void BM_Prop3Parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(prop3_scan({4, 64, 64, 64, 0.2, 1e-12}));
}

}  // namespace

BENCHMARK(BM_VertexProfileSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VertexProfileParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountBelowSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountBelowParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CombinationSerial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CombinationParallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CubeScanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CubeScanParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Prop3Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Prop3Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
