// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "pbw/polytope.hpp"

using namespace pbw;

namespace {

Polytope c3() { return Polytope(RootSystem(make_spec(Family::C, 3)), {2, 2, 2}); }
Polytope a4() { return Polytope(RootSystem(make_spec(Family::A, 4)), {2, 1, 1, 2}); }

void BM_points_serial(benchmark::State& st) {
  auto p = st.range(0) ? a4() : c3();
  for (auto _ : st) benchmark::DoNotOptimize(p.points_serial());
}

void BM_points_parallel(benchmark::State& st) {
  auto p = st.range(0) ? a4() : c3();
  for (auto _ : st) benchmark::DoNotOptimize(p.points());
}

void BM_character_serial(benchmark::State& st) {
  auto p = st.range(0) ? a4() : c3();
  for (auto _ : st) benchmark::DoNotOptimize(p.character_serial());
}

void BM_character_parallel(benchmark::State& st) {
  auto p = st.range(0) ? a4() : c3();
  for (auto _ : st) benchmark::DoNotOptimize(p.character());
}

void BM_minkowski_serial(benchmark::State& st) {
  const auto spec = make_spec(Family::C, 3);
  for (auto _ : st) benchmark::DoNotOptimize(minkowski_subset_serial(spec, {1, 1, 1}, {1, 0, 1}));
}

void BM_minkowski_parallel(benchmark::State& st) {
  const auto spec = make_spec(Family::C, 3);
  for (auto _ : st) benchmark::DoNotOptimize(minkowski_subset(spec, {1, 1, 1}, {1, 0, 1}));
}

}  // namespace

BENCHMARK(BM_points_serial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_points_parallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_character_serial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_character_parallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_minkowski_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_minkowski_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
