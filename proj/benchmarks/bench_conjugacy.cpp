#include <benchmark/benchmark.h>

#include "clh/conjugacy.hpp"

using namespace clh;

static void BM_EnumerateClasses(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        unsigned long count = 0;
        for_each_class(n, 2, [&](const ClassLabel&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_EnumerateClasses)->DenseRange(2, 8, 2)->Complexity();

static void BM_ExactMarginal(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto m = exact_marginal(n, 2, 1);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_ExactMarginal)->Arg(4)->Arg(6)->Arg(8);

static void BM_IrreduciblePolys(benchmark::State& state) {
    for (auto _ : state) {
        auto polys = irreducible_polys(2, static_cast<unsigned>(state.range(0)));
        benchmark::DoNotOptimize(polys);
    }
}
BENCHMARK(BM_IrreduciblePolys)->Arg(6)->Arg(8);
