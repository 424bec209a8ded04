#include <benchmark/benchmark.h>

#include "common.hpp"

using namespace gfc;
using namespace gfc::bench;

template <class F>
static void BM_Wedge(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto x = dense<F>(n, 1), y = dense<F>(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(wedge(x, y));
}

template <class F>
static void BM_Coproduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto x = dense<F>(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(coproduct(x));
}

template <class F>
static void BM_Meet(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto x = dense<F>(n, 4), y = dense<F>(n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(meet(x, y));
}

// The extended form is built once; its determinant cache warms on the first pass.
template <class F>
static void BM_Clifford(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto form = extend_form(BilinearForm<F>(matrix<F>(n, 6)));
  const auto x = dense<F>(n, 7), y = dense<F>(n, 8);
  for (auto _ : state) benchmark::DoNotOptimize(clifford_product<F>(form, x, y));
}

template <class F>
static void BM_CliffordColdCache(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto m = matrix<F>(n, 6);
  const auto x = dense<F>(n, 7), y = dense<F>(n, 8);
  for (auto _ : state) {
    const auto form = extend_form(BilinearForm<F>(m));
    benchmark::DoNotOptimize(clifford_product<F>(form, x, y));
  }
}

BENCHMARK(BM_Wedge<Rational>)->DenseRange(2, 8, 2);
BENCHMARK(BM_Wedge<double>)->DenseRange(2, 8, 2);
BENCHMARK(BM_Coproduct<Rational>)->DenseRange(2, 8, 2);
BENCHMARK(BM_Coproduct<double>)->DenseRange(2, 8, 2);
BENCHMARK(BM_Meet<Rational>)->DenseRange(2, 6, 2);
BENCHMARK(BM_Meet<double>)->DenseRange(2, 6, 2);
BENCHMARK(BM_Clifford<Rational>)->DenseRange(2, 6, 2);
BENCHMARK(BM_Clifford<double>)->DenseRange(2, 6, 2);
BENCHMARK(BM_CliffordColdCache<Rational>)->DenseRange(2, 6, 2);
