// Serial reference vs OpenMP kernels on the same inputs.

#include <benchmark/benchmark.h>

#include "phitile/kernels.hpp"
#include "phitile/rabbits.hpp"
#include "phitile/subdivision.hpp"

namespace {

using namespace phitile;

TileSet ep_window(int w) { return tiling::fundamental_tiles({GridMode::ep, Parity::even, -w, w}); }

void BM_OverlapSerial(benchmark::State& state) {
  const auto rects = ep_window(static_cast<int>(state.range(0))).rects();
  for (auto _ : state) benchmark::DoNotOptimize(serial::overlapping_pairs(rects));
  state.SetComplexityN(static_cast<int64_t>(rects.size()));
}

void BM_OverlapParallel(benchmark::State& state) {
  const auto rects = ep_window(static_cast<int>(state.range(0))).rects();
  for (auto _ : state) benchmark::DoNotOptimize(overlapping_pairs(rects));
  state.SetComplexityN(static_cast<int64_t>(rects.size()));
}

void BM_GridSerial(benchmark::State& state) {
  const GridSpec spec{GridMode::ep, Parity::even, -static_cast<int>(state.range(0)), static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(tiling::fundamental_tiles_serial(spec));
}

void BM_GridParallel(benchmark::State& state) {
  const GridSpec spec{GridMode::ep, Parity::even, -static_cast<int>(state.range(0)), static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(tiling::fundamental_tiles(spec));
}

void BM_SubdivideSerial(benchmark::State& state) {
  const auto ap = tiling::fundamental_tiles({GridMode::ap, Parity::even, -static_cast<int>(state.range(0)),
                                             static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(subdiv::subdivide_all_serial(ap));
}

void BM_SubdivideParallel(benchmark::State& state) {
  const auto ap = tiling::fundamental_tiles({GridMode::ap, Parity::even, -static_cast<int>(state.range(0)),
                                             static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(subdiv::subdivide_all(ap));
}

void BM_RabbitVerifySerial(benchmark::State& state) {
  const auto t = rabbits::layout_trapezoid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rabbits::verify_tiling_serial(t));
}

void BM_RabbitVerifyParallel(benchmark::State& state) {
  const auto t = rabbits::layout_trapezoid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rabbits::verify_tiling(t));
}

BENCHMARK(BM_OverlapSerial)->DenseRange(4, 10, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OverlapParallel)->DenseRange(4, 10, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridSerial)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridParallel)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubdivideSerial)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubdivideParallel)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RabbitVerifySerial)->Arg(10)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RabbitVerifyParallel)->Arg(10)->Arg(13)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
