#include <benchmark/benchmark.h>

#include "emlab/polyform.hpp"
#include "emlab/powersum.hpp"
#include "emlab/search.hpp"
#include "emlab/signanalysis.hpp"

namespace {

void BM_SumDirect(benchmark::State& state) {
  const emlab::PowerSumQuery q(emlab::Int(state.range(0)), 20);
  for (auto _ : state) benchmark::DoNotOptimize(emlab::sum_direct(q));
}
BENCHMARK(BM_SumDirect)->Arg(200)->Arg(2000);

void BM_SumEmlExact(benchmark::State& state) {
  const emlab::PowerSumQuery q(199, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(emlab::sum_eml_exact(q));
}
BENCHMARK(BM_SumEmlExact)->Arg(4)->Arg(20)->Arg(60);

void BM_FullEmlPoly(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(emlab::full_eml_poly(k));
}
BENCHMARK(BM_FullEmlPoly)->Arg(10)->Arg(40)->Arg(100);

void BM_ClearedPolyEval(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto poly = emlab::cleared_poly(k).poly;
  const emlab::Int m0 = emlab::Int(k + 1) * (k - 2);
  for (auto _ : state) benchmark::DoNotOptimize(poly.eval(m0));
}
BENCHMARK(BM_ClearedPolyEval)->Arg(51)->Arg(199);

void BM_SignSummary(benchmark::State& state) {
  const emlab::DivisorBudget budget;
  for (auto _ : state) {
    benchmark::DoNotOptimize(emlab::sign_summary(static_cast<int>(state.range(0)), budget));
  }
}
BENCHMARK(BM_SignSummary)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Search(benchmark::State& state) {
  const auto shards = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(emlab::find_solutions({1, 12}, {3, 5000}, shards));
  }
}
BENCHMARK(BM_Search)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
