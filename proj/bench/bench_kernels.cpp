// Serial reference vs OpenMP kernels.
//   supercong_bench --benchmark_filter=Sum

#include <benchmark/benchmark.h>
#include <omp.h>

#include "supercong/hyperseries.hpp"
#include "supercong/suite.hpp"

using namespace supercong;

namespace {

// sum_{k<p} C(2k,k)^2 C(3k,k) / 216^k mod p^2
BinomialSumSpec sum_spec(std::int64_t p) {
  BinomialSumSpec s;
  s.factors = {BinomialFactor{2, 0, 1, 0, 2}, BinomialFactor{3, 0, 1, 0, 1}};
  s.ratio = make_rational(1, 216);
  s.last = p - 1;
  return s;
}

void BM_SumSerial(benchmark::State& state) {
  const auto p = state.range(0);
  const BinomialSumSpec s = sum_spec(p);
  const Modulus m(static_cast<u64>(p), 2);
  for (auto _ : state) benchmark::DoNotOptimize(weighted_binomial_sum(s, m));
  state.SetItemsProcessed(state.iterations() * p);
}

void BM_SumParallel(benchmark::State& state) {
  const auto p = state.range(0);
  const BinomialSumSpec s = sum_spec(p);
  const Modulus m(static_cast<u64>(p), 2);
  for (auto _ : state) benchmark::DoNotOptimize(weighted_binomial_sum_parallel(s, m));
  state.SetItemsProcessed(state.iterations() * p);
  state.counters["threads"] = omp_get_max_threads();
}

void BM_Suite(benchmark::State& state) {
  RunOptions o;
  o.case_globs = {"THM-*", "COR-*"};
  o.p_max = 400;
  o.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(o));
}

}  // namespace

BENCHMARK(BM_SumSerial)->Arg(10007)->Arg(100003)->Arg(1000003)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SumParallel)->Arg(10007)->Arg(100003)->Arg(1000003)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Suite)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
