#include <benchmark/benchmark.h>

#include "shadowcalc/sweeps.hpp"

using namespace shadow;

// The serial sweeps are the references; arg 1 selects the OpenMP version.

static void BM_MoveSoundness(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_move_soundness(20000, 8, 5, 1, state.range(0) != 0));
}
BENCHMARK(BM_MoveSoundness)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_LemmaCompleteness(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_lemma_completeness(6, 4, state.range(0) != 0));
}
BENCHMARK(BM_LemmaCompleteness)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_ReducerAgreement(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_reducer_agreement(6, 4, state.range(0) != 0));
}
BENCHMARK(BM_ReducerAgreement)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_DehnGrid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_dehn_grid(5, state.range(0) != 0));
}
BENCHMARK(BM_DehnGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
