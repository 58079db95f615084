#include <benchmark/benchmark.h>

#include "flatsurf/builders.hpp"
#include "flatsurf/census.hpp"
#include "flatsurf/parallel.hpp"

using namespace flatsurf;

static void BM_SaddleConnections_X5(benchmark::State& state) {
    set_default_jobs(1);
    auto x5 = build(Family::Xn, 5);
    double L = static_cast<double>(state.range(0));
    for (auto _ : state) {
        auto scs = saddle_connections(x5, L);
        benchmark::DoNotOptimize(scs.size());
    }
    set_default_jobs(0);
}
BENCHMARK(BM_SaddleConnections_X5)->Arg(10)->Arg(20)->Arg(40);

static void BM_CylinderCensus_X5(benchmark::State& state) {
    set_default_jobs(1);
    auto x5 = build(Family::Xn, 5);
    double L = static_cast<double>(state.range(0));
    for (auto _ : state) {
        auto cyls = cylinders_up_to(x5, L);
        benchmark::DoNotOptimize(cyls.size());
    }
    set_default_jobs(0);
}
BENCHMARK(BM_CylinderCensus_X5)->Arg(10)->Arg(20);

static void BM_Decompose_S5_Vertical(benchmark::State& state) {
    auto s5 = build(Family::Sn, 5);
    for (auto _ : state) {
        auto dec = decompose(s5, {0, 1}, 80.0);
        benchmark::DoNotOptimize(dec.cylinders.size());
    }
}
BENCHMARK(BM_Decompose_S5_Vertical);
