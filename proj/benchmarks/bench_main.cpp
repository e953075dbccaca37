#include <benchmark/benchmark.h>

#include <random>

#include "pcnlab/arith/factor.hpp"
#include "pcnlab/bounds/conditions.hpp"
#include "pcnlab/bounds/pipelines.hpp"
#include "pcnlab/chars/chars.hpp"
#include "pcnlab/classify/classify.hpp"
#include "pcnlab/ffield/small_field.hpp"
#include "pcnlab/fqxpoly/normality.hpp"
#include "pcnlab/search/search.hpp"

using namespace pcnlab;

static void BM_FactorQnMinus1(benchmark::State& st) {
  const auto q = static_cast<std::uint64_t>(st.range(0));
  const auto n = static_cast<std::uint64_t>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(arith::factor_qn_minus_1(q, n));
}
BENCHMARK(BM_FactorQnMinus1)->Args({17, 12})->Args({8, 24})->Args({9, 21})->Args({64, 90})->Unit(benchmark::kMillisecond);

static void BM_Classify(benchmark::State& st) {
  std::uint64_t n = 2;
  for (auto _ : st) {
    benchmark::DoNotOptimize(classify::is_completely_basic(1009, n));
    if (++n > 5000) n = 2;
  }
}
BENCHMARK(BM_Classify);

static void BM_CompletelyNormalTest(benchmark::State& st) {
  auto f = ffield::make_field(2, 3, static_cast<unsigned>(st.range(0)));
  std::mt19937_64 rng(1);
  for (auto _ : st) benchmark::DoNotOptimize(fqxpoly::is_completely_normal(f, f.random(rng)));
}
BENCHMARK(BM_CompletelyNormalTest)->Arg(6)->Arg(24)->Arg(60);

static void BM_PrimitivityTest(benchmark::State& st) {
  auto f = ffield::make_field(2, 3, static_cast<unsigned>(st.range(0)));
  f.group_order_factors();
  std::mt19937_64 rng(1);
  for (auto _ : st) benchmark::DoNotOptimize(f.is_primitive(f.random(rng)));
}
BENCHMARK(BM_PrimitivityTest)->Arg(6)->Arg(24)->Arg(60);

static void BM_Count(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(search::count_cn_pcn(2, static_cast<std::uint64_t>(st.range(0))));
}
BENCHMARK(BM_Count)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_FindPcnRandom(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(search::find_pcn(17, 12));
}
BENCHMARK(BM_FindPcnRandom)->Unit(benchmark::kMillisecond);

static void BM_Cond2(benchmark::State& st) {
  std::uint64_t q = 8;
  for (auto _ : st) {
    benchmark::DoNotOptimize(bounds::cond2(360, q, false));
    if (++q > 5000) q = 8;
  }
}
BENCHMARK(BM_Cond2);

static void BM_Cond3Exact(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(bounds::cond3(73, 12, bounds::W3Mode::kExact));
}
BENCHMARK(BM_Cond3Exact)->Unit(benchmark::kMicrosecond);

static void BM_CharsSelfTest(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(chars::self_test(2, 1, static_cast<unsigned>(st.range(0))));
}
BENCHMARK(BM_CharsSelfTest)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_PipelineTheorem1(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(bounds::pipeline_theorem1());
}
BENCHMARK(BM_PipelineTheorem1)->Iterations(1)->Unit(benchmark::kSecond);

BENCHMARK_MAIN();
