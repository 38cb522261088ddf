#include <benchmark/benchmark.h>

#include "rankwl/decomposition.hpp"
#include "rankwl/graph.hpp"
#include "rankwl/pebble.hpp"
#include "rankwl/verify.hpp"
#include "rankwl/wl.hpp"

using namespace rankwl;

namespace {

Graph bench_graph(int n) {
    CounterRng rng(42, n);
    return random_graph(n, rng);
}

void BM_wl2_serial(benchmark::State& state) {
    Graph g = bench_graph(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(wl_stable_k(g, 2, Exec::Serial));
}

void BM_wl2_parallel(benchmark::State& state) {
    Graph g = bench_graph(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(wl_stable_k(g, 2, Exec::Parallel));
}

void BM_wl3_serial(benchmark::State& state) {
    Graph g = bench_graph(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(wl_stable_k(g, 3, Exec::Serial));
}

void BM_wl3_parallel(benchmark::State& state) {
    Graph g = bench_graph(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(wl_stable_k(g, 3, Exec::Parallel));
}

void BM_wl2_reference(benchmark::State& state) {
    Graph g = bench_graph(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(wl_stable_k_reference(g, 2));
}

void BM_rankwidth_serial(benchmark::State& state) {
    Graph g = bench_graph(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rank_width_exact(g, Exec::Serial));
}

void BM_rankwidth_parallel(benchmark::State& state) {
    Graph g = bench_graph(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rank_width_exact(g, Exec::Parallel));
}

void BM_pebble_serial(benchmark::State& state) {
    Graph g = Graph::cycle(8), h = Graph::disjoint_union(Graph::cycle(4), Graph::cycle(4));
    for (auto _ : state)
        benchmark::DoNotOptimize(spoiler_wins(g, h, int(state.range(0)), Exec::Serial));
}

void BM_pebble_parallel(benchmark::State& state) {
    Graph g = Graph::cycle(8), h = Graph::disjoint_union(Graph::cycle(4), Graph::cycle(4));
    for (auto _ : state)
        benchmark::DoNotOptimize(spoiler_wins(g, h, int(state.range(0)), Exec::Parallel));
}

BENCHMARK(BM_wl2_serial)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_wl2_parallel)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_wl2_reference)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_wl3_serial)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_wl3_parallel)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rankwidth_serial)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rankwidth_parallel)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pebble_serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pebble_parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
