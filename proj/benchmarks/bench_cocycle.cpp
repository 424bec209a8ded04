#include <benchmark/benchmark.h>

#include "common.hpp"

using namespace gfc;
using namespace gfc::bench;

static void BM_CochainExtend(benchmark::State& state) {
  const auto m = matrix<Rational>(static_cast<int>(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(cochain_extend(m));
}

static void BM_ConvolutionInverse(benchmark::State& state) {
  const auto p = cochain_extend(matrix<Rational>(static_cast<int>(state.range(0)), 10));
  for (auto _ : state) benchmark::DoNotOptimize(convolution_inverse(p));
}

static void BM_CircleProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CochainPair<Rational> pair(cochain_extend(matrix<Rational>(n, 11)));
  const auto x = dense<Rational>(n, 12), y = dense<Rational>(n, 13);
  for (auto _ : state) benchmark::DoNotOptimize(circle_product(pair, x, y));
}

static void BM_Coboundary(benchmark::State& state) {
  const CochainPair<Rational> pair(cochain_extend(matrix<Rational>(static_cast<int>(state.range(0)), 14)));
  for (auto _ : state) benchmark::DoNotOptimize(coboundary(pair));
}

BENCHMARK(BM_CochainExtend)->DenseRange(2, 10, 2);
BENCHMARK(BM_ConvolutionInverse)->DenseRange(2, 10, 2);
BENCHMARK(BM_CircleProduct)->DenseRange(2, 6, 2);
BENCHMARK(BM_Coboundary)->DenseRange(2, 4, 1);
