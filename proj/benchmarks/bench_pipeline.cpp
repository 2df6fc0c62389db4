#include <benchmark/benchmark.h>

#include "quintic/quintic.hpp"

namespace {

using namespace quintic;

const GeneralQuintic kQuintic{0, 0, 0, 1, 3};

void BM_BuildResolvent(benchmark::State& state) {
  const DepressedQuintic dq = depress(sample_quintic(1, 0, 5.0));
  for (auto _ : state) benchmark::DoNotOptimize(build_resolvent(dq));
}
BENCHMARK(BM_BuildResolvent);

void BM_BuildResolventProductForm(benchmark::State& state) {
  const DepressedQuintic dq = depress(sample_quintic(1, 0, 5.0));
  for (auto _ : state) benchmark::DoNotOptimize(build_resolvent_product_form(dq));
}
BENCHMARK(BM_BuildResolventProductForm);

void BM_FindResolventRoots(benchmark::State& state) {
  const DensePolynomial r = build_resolvent(depress(kQuintic)).to_dense();
  for (auto _ : state) benchmark::DoNotOptimize(find_all_roots(r));
}
BENCHMARK(BM_FindResolventRoots);

void BM_SolveQuintic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_quintic(kQuintic));
}
BENCHMARK(BM_SolveQuintic);

void BM_FullCheck(benchmark::State& state) {
  const GeneralQuintic q = sample_quintic(7, 3, 5.0);
  for (auto _ : state) benchmark::DoNotOptimize(full_check(q));
}
BENCHMARK(BM_FullCheck);

void BM_RunTrials(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_trials(64, 42, 5.0, threads));
}
BENCHMARK(BM_RunTrials)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_PairSumCombination(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pair_sum_combination(Complex(-0.9)));
}
BENCHMARK(BM_PairSumCombination);

}  // namespace
BENCHMARK_MAIN();
