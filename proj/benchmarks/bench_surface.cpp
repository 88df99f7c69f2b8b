#include <benchmark/benchmark.h>

#include "extremal/chords.hpp"
#include "extremal/gf.hpp"
#include "extremal/surface.hpp"

namespace {

void BM_FieldMul(benchmark::State& state) {
  extremal::Field F(static_cast<int>(state.range(0)), 1);
  extremal::FE a = F.generator(), b = F.add(F.generator(), F.one());
  for (auto _ : state) {
    benchmark::DoNotOptimize(a = F.mul(a, b));
  }
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(3)->Arg(5);

void BM_BuildSurface(benchmark::State& state) {
  extremal::Field F(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(extremal::build_surface(F, extremal::Model::Fermat));
  }
}
BENCHMARK(BM_BuildSurface)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_EnumerateChords(benchmark::State& state) {
  extremal::Field F(static_cast<int>(state.range(0)), 1);
  extremal::Surface x = extremal::build_surface(F, extremal::Model::Fermat);
  for (auto _ : state) {
    benchmark::DoNotOptimize(extremal::enumerate_chords(x));
  }
}
BENCHMARK(BM_EnumerateChords)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
