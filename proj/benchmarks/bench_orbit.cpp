#include <benchmark/benchmark.h>

#include "flatsurf/veech.hpp"

using namespace flatsurf;

static void BM_OrbitCount_SL2Z(benchmark::State& state) {
    auto grp = sl2z();
    double T = static_cast<double>(state.range(0));
    for (auto _ : state) {
        auto oc = orbit_count(grp, {1, 0}, T, 4.0);
        benchmark::DoNotOptimize(oc.count);
    }
}
BENCHMARK(BM_OrbitCount_SL2Z)->Arg(10)->Arg(25);

static void BM_OrbitCount_Gamma5(benchmark::State& state) {
    auto grp = gamma_n(5);
    double h1 = 1.9021130325903071;
    for (auto _ : state) {
        auto oc = orbit_count(grp, {0, h1}, 25.0, 4.0);
        benchmark::DoNotOptimize(oc.count);
    }
}
BENCHMARK(BM_OrbitCount_Gamma5);

BENCHMARK_MAIN();
