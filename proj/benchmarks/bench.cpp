// Microbenchmarks for the hot paths: distance matrices, the exact searches
// on structured and random graphs, construction certification, and corpus
// enumeration.

#include <benchmark/benchmark.h>

#include "rdom/families.hpp"
#include "rdom/graph.hpp"
#include "rdom/solvers.hpp"
#include "rdom/verify.hpp"

namespace {

void BM_all_pairs_distances(benchmark::State& state) {
    const auto g = rdom::random_connected_graph(
        static_cast<int>(state.range(0)), 0.3, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rdom::all_pairs_distances(g));
    }
}
BENCHMARK(BM_all_pairs_distances)->Arg(16)->Arg(64)->Arg(128);

void BM_resolving_domination_path(benchmark::State& state) {
    const auto g = rdom::path_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rdom::minimum_set(
            g, rdom::SetPredicate::KResolvingDominating, 2));
    }
}
BENCHMARK(BM_resolving_domination_path)->Arg(12)->Arg(16)->Arg(20);

void BM_resolving_domination_cycle(benchmark::State& state) {
    const auto g = rdom::cycle_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rdom::minimum_set(
            g, rdom::SetPredicate::KResolvingDominating, 2));
    }
}
BENCHMARK(BM_resolving_domination_cycle)->Arg(12)->Arg(18);

void BM_all_invariants_random(benchmark::State& state) {
    const auto g = rdom::random_connected_graph(
        static_cast<int>(state.range(0)), 0.4, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rdom::all_invariants(g, 2));
    }
}
BENCHMARK(BM_all_invariants_random)->Arg(8)->Arg(10)->Arg(12);

void BM_metric_dimension_random(benchmark::State& state) {
    const auto g = rdom::random_connected_graph(
        static_cast<int>(state.range(0)), 0.4, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            rdom::minimum_set(g, rdom::SetPredicate::Resolving));
    }
}
BENCHMARK(BM_metric_dimension_random)->Arg(10)->Arg(14);

// Build the largest two-vertex-search graph and confirm its value.
void BM_extremal_certification(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto g = rdom::extremal_gr(k, 2);
        benchmark::DoNotOptimize(rdom::minimum_set(
            g, rdom::SetPredicate::KResolvingDominating, k));
    }
}
BENCHMARK(BM_extremal_certification)->Arg(1)->Arg(2);

void BM_enumerate_connected(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rdom::count_connected_graphs(n));
    }
}
BENCHMARK(BM_enumerate_connected)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
