// Timings for the paths the tests compare. The series routes are the ones
// meant for real use; the brute-force routes exist as oracles and their
// exponential blowup is visible here.

#include <benchmark/benchmark.h>

#include <vector>

#include "compsum/compsum.hpp"
#include "compsum/iterated.hpp"
#include "compsum/pitree.hpp"
#include "compsum/sequences.hpp"
#include "compsum/series.hpp"

using compsum::Rational;
using compsum::SeriesQ;

static void BM_CompSumSeries(benchmark::State& state) {
  const auto g = compsum::woon_input();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compsum::comp_sum(g, n));
}
BENCHMARK(BM_CompSumSeries)->Arg(8)->Arg(12)->Arg(14);

static void BM_CompSumBrute(benchmark::State& state) {
  const auto g = compsum::woon_input();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compsum::comp_sum_brute(g, n));
}
BENCHMARK(BM_CompSumBrute)->Arg(8)->Arg(12)->Arg(14);

static void BM_WeightedConvolution(benchmark::State& state) {
  const auto g = compsum::woon_input();
  const auto f = compsum::log1p_weights();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compsum::weighted_convolution(f, g, n));
}
BENCHMARK(BM_WeightedConvolution)->Arg(8)->Arg(14);

static void BM_RowSums(benchmark::State& state) {
  const auto g = compsum::woon_input();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compsum::row_sums(g, n));
}
BENCHMARK(BM_RowSums)->Arg(16)->Arg(64)->Arg(128);

static void BM_BernoulliGf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compsum::bernoulli_numbers(n));
}
BENCHMARK(BM_BernoulliGf)->Arg(12)->Arg(32)->Arg(64);

static void BM_BernoulliStirling(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compsum::bernoulli_via_stirling(n));
}
BENCHMARK(BM_BernoulliStirling)->Arg(12)->Arg(32)->Arg(64);

static void BM_SeriesMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SeriesQ a = compsum::exp_minus_one_series(n);
  const SeriesQ b = compsum::log1p_series(n);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMultiply)->Arg(32)->Arg(128);

static void BM_SeriesReciprocal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SeriesQ a = compsum::expm1_over_z_series(n);
  for (auto _ : state) benchmark::DoNotOptimize(compsum::reciprocal(a));
}
BENCHMARK(BM_SeriesReciprocal)->Arg(32)->Arg(128);

static void BM_SeriesCompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SeriesQ f = compsum::log1p_series(n);
  const SeriesQ g = compsum::exp_minus_one_series(n);
  for (auto _ : state) benchmark::DoNotOptimize(compsum::compose(f, g));
}
BENCHMARK(BM_SeriesCompose)->Arg(16)->Arg(48);

static void BM_IteratedEvaluate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<SeriesQ> fs{compsum::log1p_series(n), compsum::geometric_series(n),
                                compsum::exp_minus_one_series(n)};
  const auto shapes = compsum::enumerate_shapes(3);
  for (auto _ : state) benchmark::DoNotOptimize(compsum::evaluate_iterated(fs, shapes[0], n));
}
BENCHMARK(BM_IteratedEvaluate)->Arg(6)->Arg(10);

BENCHMARK_MAIN();
