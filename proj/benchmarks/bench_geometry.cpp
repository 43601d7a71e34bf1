#include <benchmark/benchmark.h>

#include "vgeom/grassmannian.hpp"
#include "vgeom/hyperplanes.hpp"
#include "vgeom/magic_line.hpp"
#include "vgeom/polar.hpp"
#include "vgeom/veldkamp.hpp"

namespace {

void BM_EnumerateHyperplanes(benchmark::State& state) {
  const auto g = vgeom::build_g2(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vgeom::enumerate_hyperplanes(g));
}
BENCHMARK(BM_EnumerateHyperplanes)->DenseRange(5, 9)->Unit(benchmark::kMillisecond);

void BM_ScanHyperplanes(benchmark::State& state) {
  const auto g = vgeom::build_g2(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vgeom::enumerate_hyperplanes_by_scan(g));
}
BENCHMARK(BM_ScanHyperplanes)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);

void BM_BuildVeldkamp(benchmark::State& state) {
  const auto g = vgeom::build_g2(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vgeom::build_veldkamp(g));
}
BENCHMARK(BM_BuildVeldkamp)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  const auto v = vgeom::build_veldkamp(vgeom::build_g2(7));
  for (auto _ : state) benchmark::DoNotOptimize(vgeom::tabulate_census(v));
}
BENCHMARK(BM_Census)->Unit(benchmark::kMillisecond);

void BM_MagicLine(benchmark::State& state) {
  const auto v = vgeom::build_veldkamp(vgeom::build_g2(7));
  const auto w = vgeom::extract_symplectic(v);
  for (auto _ : state) {
    const auto m = vgeom::build_magic_line(v, w, 7);
    benchmark::DoNotOptimize(vgeom::verify_magic_line(v, w, m));
  }
}
BENCHMARK(BM_MagicLine)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
