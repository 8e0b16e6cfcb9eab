#include <benchmark/benchmark.h>

#include "patcount/classes.hpp"
#include "patcount/formulas.hpp"
#include "patcount/genfunc.hpp"
#include "patcount/oracle.hpp"

using namespace patcount;

static void BM_FilterAvoiders(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto R = class_patterns(ClassId::D1);
  OracleConfig cfg;
  cfg.ceiling = OracleConfig::kHardLimit;
  for (auto _ : state)
    benchmark::DoNotOptimize(filter_avoiders(n, R, cfg));
}
BENCHMARK(BM_FilterAvoiders)->DenseRange(6, 9);

static void BM_GenerateClass(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(generate_class(ClassId::D1, n));
}
BENCHMARK(BM_GenerateClass)->Arg(10)->Arg(14)->Arg(16);

static void BM_CountOccurrences(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto members = generate_class(ClassId::D2, n);
  const Pattern q = Pattern::from_code(321);
  for (auto _ : state) {
    BigInt total = 0;
    for (const auto& sigma : members) total += count_occurrences(sigma, q);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_CountOccurrences)->Arg(10)->Arg(14);

static void BM_ClosedForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(closed_form(ClassId::D1, 321, n));
}
BENCHMARK(BM_ClosedForm)->Arg(30)->Arg(200);

static void BM_GfCoefficients(benchmark::State& state) {
  const int terms = static_cast<int>(state.range(0));
  const RationalGF gf = gf_t1_321();
  for (auto _ : state)
    benchmark::DoNotOptimize(gf_coefficients(gf, terms));
}
BENCHMARK(BM_GfCoefficients)->Arg(50)->Arg(500);

static void BM_VerifyAll(benchmark::State& state) {
  VerifyOptions opts;
  opts.oracle.ceiling = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_all(static_cast<int>(state.range(0)),
                                        opts));
}
BENCHMARK(BM_VerifyAll)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
