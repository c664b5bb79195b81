#include <benchmark/benchmark.h>

#include "clh/fplinalg.hpp"
#include "clh/random.hpp"
#include "clh/young.hpp"

using namespace clh;

static void BM_YtabSample(benchmark::State& state) {
    RandomSource rng(1);
    const Rat eps = make_rat(Int(1), Int(1000000));
    for (auto _ : state) {
        Partition lam = ytab_sample(2, rng, eps);
        benchmark::DoNotOptimize(lam);
    }
}
BENCHMARK(BM_YtabSample);

static void BM_RandomGL(benchmark::State& state) {
    RandomSource rng(2);
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        MatrixModP m = random_gl(n, 2, rng);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_RandomGL)->Arg(2)->Arg(4)->Arg(8);

static void BM_MatrixPartitionDraw(benchmark::State& state) {
    RandomSource rng(3);
    for (auto _ : state) {
        Partition lam = partition_at(random_gl(4, 2, rng), 1);
        benchmark::DoNotOptimize(lam);
    }
}
BENCHMARK(BM_MatrixPartitionDraw);

static void BM_CokernelSample(benchmark::State& state) {
    RandomSource rng(4);
    for (auto _ : state) {
        CokernelDraw draw = cokernel_sample(static_cast<unsigned>(state.range(0)), 2, 12, rng);
        benchmark::DoNotOptimize(draw);
    }
}
BENCHMARK(BM_CokernelSample)->Arg(2)->Arg(4);

static void BM_LatticeWalk(benchmark::State& state) {
    RandomSource rng(5);
    for (auto _ : state) {
        Partition lam = lattice_walk_sample(3, rng);
        benchmark::DoNotOptimize(lam);
    }
}
BENCHMARK(BM_LatticeWalk);
