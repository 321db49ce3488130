#include <benchmark/benchmark.h>

#include <random>

#include "rgt/edge_subset.hpp"
#include "rgt/enumerate.hpp"
#include "rgt/recursions.hpp"
#include "rgt/twuality.hpp"

namespace {

rgt::RibbonGraph graph_with_edges(unsigned edges, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    rgt::RibbonGraph g = rgt::random_ribbon_graph(rng, edges);
    while (g.edge_count() != edges) g = rgt::random_ribbon_graph(rng, edges);
    return g;
}

void BM_trace_faces(benchmark::State& state) {
    const auto g = graph_with_edges(static_cast<unsigned>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(rgt::face_count(g));
}
BENCHMARK(BM_trace_faces)->Arg(8)->Arg(16)->Arg(24);

void BM_partial_dual(benchmark::State& state) {
    const auto g = graph_with_edges(static_cast<unsigned>(state.range(0)), 2);
    const auto a = rgt::EdgeSubset::full(g.edge_count());
    for (auto _ : state) benchmark::DoNotOptimize(rgt::partial_dual(g, a));
}
BENCHMARK(BM_partial_dual)->Arg(8)->Arg(16)->Arg(24);

void BM_star_polynomial(benchmark::State& state) {
    const auto g = graph_with_edges(static_cast<unsigned>(state.range(0)), 3);
    rgt::EnumerateOptions opts;
    for (auto _ : state)
        benchmark::DoNotOptimize(rgt::partial_star_polynomial(g, opts));
}
BENCHMARK(BM_star_polynomial)->Arg(10)->Arg(13)->Arg(16);

void BM_petrial_polynomial(benchmark::State& state) {
    const auto g = graph_with_edges(static_cast<unsigned>(state.range(0)), 4);
    rgt::EnumerateOptions opts;
    for (auto _ : state)
        benchmark::DoNotOptimize(rgt::partial_petrial_polynomial(g, opts));
}
BENCHMARK(BM_petrial_polynomial)->Arg(10)->Arg(13)->Arg(16);

void BM_petrial_polynomial_threads(benchmark::State& state) {
    const auto g = graph_with_edges(16, 4);
    rgt::EnumerateOptions opts;
    opts.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(rgt::partial_petrial_polynomial(g, opts));
}
BENCHMARK(BM_petrial_polynomial_threads)->Arg(1)->Arg(2)->Arg(4);

void BM_restricted_polynomial(benchmark::State& state) {
    const auto g = graph_with_edges(static_cast<unsigned>(state.range(0)), 5);
    rgt::EnumerateOptions opts;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            rgt::restricted_orientable_petrial_polynomial(g, opts));
}
BENCHMARK(BM_restricted_polynomial)->Arg(12)->Arg(18)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
