#include <benchmark/benchmark.h>

#include "clh/measure.hpp"
#include "clh/qseries.hpp"

using namespace clh;

static void BM_EulerProduct(benchmark::State& state) {
    const unsigned T = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        QSeries s = euler_product(T);
        benchmark::DoNotOptimize(s);
    }
    state.SetComplexityN(T);
}
BENCHMARK(BM_EulerProduct)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void BM_Eisenstein(benchmark::State& state) {
    const unsigned T = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        QSeries s = eisenstein(4, T);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_Eisenstein)->Arg(64)->Arg(128);

static void BM_MomentValue(benchmark::State& state) {
    const unsigned k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        EvalResult r = order_moment_value(k, 2, 80);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_MomentValue)->DenseRange(1, 4);

static void BM_EvalEulerProduct(benchmark::State& state) {
    for (auto _ : state) {
        EvalResult r = eval_euler_product(2, static_cast<unsigned>(state.range(0)));
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_EvalEulerProduct)->Arg(64)->Arg(128);
