#include <benchmark/benchmark.h>

#include "cgseries/cg_engine.hpp"

using namespace cgs;

namespace {

const char* kGroups[] = {"bd:6", "2O", "2I", "sym:6"};

void BM_SeriesParallel(benchmark::State& state) {
  const GroupModel g = make_builtin(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(series_matrix(g, SeriesKind::S, Sign::Plus));
  state.SetLabel(g.name);
}

void BM_SeriesSerial(benchmark::State& state) {
  const GroupModel g = make_builtin(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(series_matrix_serial(g, SeriesKind::S, Sign::Plus));
  state.SetLabel(g.name);
}

void BM_MinorsParallel(benchmark::State& state) {
  const GroupModel g = make_builtin(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(check_all_minors(g, SeriesKind::A, Sign::Minus, 2));
  state.SetLabel(g.name);
}

void BM_MinorsSerial(benchmark::State& state) {
  const GroupModel g = make_builtin(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(check_all_minors_serial(g, SeriesKind::A, Sign::Minus, 2));
  state.SetLabel(g.name);
}

}  // namespace

BENCHMARK(BM_SeriesParallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeriesSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinorsParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinorsSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
