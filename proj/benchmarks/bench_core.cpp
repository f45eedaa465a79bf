#include <benchmark/benchmark.h>

#include "mobius/presets.hpp"
#include "mobius/theory.hpp"

using namespace mobius;

namespace {

GroupPtr gl32() {
  const auto field = FqField::make(2);
  return GroupSet::closure(field, 3, preset_generators("GL", field, 3));
}

void BM_ClosureGL32(benchmark::State& state) {
  const auto field = FqField::make(2);
  const auto gens = preset_generators("GL", field, 3);
  for (auto _ : state) benchmark::DoNotOptimize(GroupSet::closure(field, 3, gens));
}
BENCHMARK(BM_ClosureGL32)->Unit(benchmark::kMillisecond);

void BM_ClosureSL24(benchmark::State& state) {
  const auto field = FqField::make(2, 2);
  const auto gens = preset_generators("SL", field, 2);
  for (auto _ : state) benchmark::DoNotOptimize(GroupSet::closure(field, 2, gens));
}
BENCHMARK(BM_ClosureSL24)->Unit(benchmark::kMillisecond);

void BM_SubgroupLatticeGL32(benchmark::State& state) {
  const auto g = gl32();
  for (auto _ : state) benchmark::DoNotOptimize(overgroup_interval(*g, g->trivial()));
}
BENCHMARK(BM_SubgroupLatticeGL32)->Unit(benchmark::kMillisecond);

void BM_VerifyTrivialGL32(benchmark::State& state) {
  const auto g = gl32();
  const auto h = g->trivial();
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem_4_5(*g, h));
}
BENCHMARK(BM_VerifyTrivialGL32)->Unit(benchmark::kMillisecond);

void BM_VerifyNoIntervalGL32(benchmark::State& state) {
  const auto g = gl32();
  const auto h = g->trivial();
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem_4_5(*g, h, {}, false));
}
BENCHMARK(BM_VerifyNoIntervalGL32)->Unit(benchmark::kMillisecond);

}  // namespace
