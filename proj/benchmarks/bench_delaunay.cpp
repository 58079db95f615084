#include <benchmark/benchmark.h>

#include "flatsurf/builders.hpp"
#include "flatsurf/surface.hpp"
#include "flatsurf/veech.hpp"

using namespace flatsurf;

static void BM_Delaunay_TwistedX5(benchmark::State& state) {
    auto x5 = build(Family::Xn, 5);
    Mat2 u = veech_unipotent(5);
    Mat2 g = Mat2::identity();
    for (int i = 0; i < state.range(0); ++i) g = g * u;
    auto sheared = apply_matrix(g, x5);
    for (auto _ : state) {
        auto d = delaunay(sheared);
        benchmark::DoNotOptimize(d.polygons.size());
    }
}
BENCHMARK(BM_Delaunay_TwistedX5)->Arg(1)->Arg(3)->Arg(6);

static void BM_Isomorphism_X5(benchmark::State& state) {
    auto x5 = build(Family::Xn, 5);
    auto moved = apply_matrix(veech_unipotent(5), x5);
    for (auto _ : state) {
        bool iso = is_isomorphic(x5, moved);
        benchmark::DoNotOptimize(iso);
    }
}
BENCHMARK(BM_Isomorphism_X5);
