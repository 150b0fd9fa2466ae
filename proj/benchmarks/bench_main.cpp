#include <benchmark/benchmark.h>

#include "mvt/graph_sum.hpp"
#include "mvt/square_tiled.hpp"
#include "mvt/stable_graph.hpp"
#include "mvt/virasoro.hpp"

static void BM_MvPolynomialCold(benchmark::State& state) {
    int g = static_cast<int>(state.range(0));
    int n = static_cast<int>(state.range(1));
    for (auto _ : state) {
        mvt::Session session;
        benchmark::DoNotOptimize(session.mv_polynomial(g, n));
    }
}
BENCHMARK(BM_MvPolynomialCold)->Args({1, 3})->Args({2, 2})->Args({2, 3})->Args({3, 1})
    ->Unit(benchmark::kMillisecond);

static void BM_MvVolumeWarm(benchmark::State& state) {
    mvt::Session session;
    int g = static_cast<int>(state.range(0));
    int n = static_cast<int>(state.range(1));
    session.mv_volume(g, n);  // populate memo
    for (auto _ : state) benchmark::DoNotOptimize(session.mv_volume(g, n));
}
BENCHMARK(BM_MvVolumeWarm)->Args({2, 3})->Args({3, 2});

static void BM_StableGraphEnumeration(benchmark::State& state) {
    int g = static_cast<int>(state.range(0));
    int n = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(mvt::enumerate_stable_graphs(g, n));
}
BENCHMARK(BM_StableGraphEnumeration)->Args({1, 2})->Args({2, 1})->Args({2, 2})->Args({3, 1})
    ->Unit(benchmark::kMillisecond);

static void BM_GraphSumPolynomial(benchmark::State& state) {
    int g = static_cast<int>(state.range(0));
    int n = static_cast<int>(state.range(1));
    mvt::Session session;
    for (auto _ : state) benchmark::DoNotOptimize(mvt::mv_polynomial_via_graphs(session, g, n));
}
BENCHMARK(BM_GraphSumPolynomial)->Args({1, 2})->Args({2, 1})->Unit(benchmark::kMillisecond);

static void BM_NorburyCount(benchmark::State& state) {
    long L = state.range(0);
    for (auto _ : state) {
        mvt::NorburyCounter counter;
        benchmark::DoNotOptimize(counter.count(1, 2, {L, L}));
    }
}
BENCHMARK(BM_NorburyCount)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
