#include <benchmark/benchmark.h>

#include "clh/measure.hpp"
#include "clh/partition.hpp"
#include "clh/young.hpp"

using namespace clh;

static void BM_EnumeratePartitions(benchmark::State& state) {
    const unsigned long bound = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        unsigned long count = 0;
        for_each_partition(bound, std::nullopt, std::nullopt,
                           [&](const Partition&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
    state.SetComplexityN(static_cast<long>(bound));
}
BENCHMARK(BM_EnumeratePartitions)->Arg(20)->Arg(30)->Arg(40)->Complexity();

static void BM_AutOrder(benchmark::State& state) {
    auto lams = enumerate_partitions(static_cast<unsigned long>(state.range(0)));
    for (auto _ : state) {
        Int acc(0);
        for (const Partition& lam : lams) acc += aut_order(lam, 2);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_AutOrder)->Arg(15)->Arg(25);

static void BM_LatticePathSum(benchmark::State& state) {
    auto lams = enumerate_partitions(static_cast<unsigned long>(state.range(0)));
    for (auto _ : state) {
        Rat acc(0);
        for (const Partition& lam : lams) acc += lattice_path_weight_sum(lam, 2);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_LatticePathSum)->Arg(6)->Arg(8)->Arg(10);
