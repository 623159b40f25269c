#include <benchmark/benchmark.h>

#include "thinkit/families.hpp"
#include "thinkit/problems.hpp"
#include "thinkit/representations.hpp"
#include "thinkit/thin_dp.hpp"

using namespace thinkit;

namespace {

ThinRepresentation weak_rep(const Graph& g) {
    const Ordering ord = Ordering::identity(g.vertex_count());
    return ThinRepresentation(g, ord, min_consistent_partition(g, ord, false), ConsistencyMode::weak);
}

ThinRepresentation strong_rep(const Graph& g) {
    const Ordering ord = Ordering::identity(g.vertex_count());
    return ThinRepresentation(g, ord, min_consistent_partition(g, ord, true), ConsistencyMode::strong);
}

void BM_StableSetOnPath(benchmark::State& state) {
    const Graph g = gen_path(static_cast<int>(state.range(0)));
    const auto rep = weak_rep(g);
    const auto enc = encode_max_weight_stable_set(g);
    for (auto _ : state) benchmark::DoNotOptimize(solve_encoding(g, rep, enc));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StableSetOnPath)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_StableSetOnGrid(benchmark::State& state) {
    const Graph g = gen_grid(static_cast<int>(state.range(0)));
    const auto rep = weak_rep(g);
    const auto enc = encode_max_weight_stable_set(g);
    for (auto _ : state) benchmark::DoNotOptimize(solve_encoding(g, rep, enc));
    state.counters["classes"] = rep.class_count();
}
BENCHMARK(BM_StableSetOnGrid)->DenseRange(2, 4);

void BM_ThreeColoringOnGrid(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const Graph g = gen_grid(r);
    const auto rep = weak_rep(g);
    const auto enc = encode_capacitated_coloring(g, {r * r, r * r, r * r});
    for (auto _ : state) benchmark::DoNotOptimize(solve_encoding(g, rep, enc));
}
BENCHMARK(BM_ThreeColoringOnGrid)->DenseRange(2, 3);

void BM_DominationOnPath(benchmark::State& state) {
    const Graph g = gen_path(static_cast<int>(state.range(0)));
    const auto rep = strong_rep(g);
    const auto enc = encode_domination(g, DominationVariant::plain);
    for (auto _ : state) benchmark::DoNotOptimize(solve_encoding(g, rep, enc));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DominationOnPath)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_DominationOnClaw(benchmark::State& state) {
    const auto fam = gen_claw_h(static_cast<int>(state.range(0)));
    const auto enc = encode_domination(fam.graph, DominationVariant::plain);
    for (auto _ : state) benchmark::DoNotOptimize(solve_encoding(fam.graph, fam.rep, enc));
}
BENCHMARK(BM_DominationOnClaw)->DenseRange(1, 2);

void BM_MinConsistentPartition(benchmark::State& state) {
    const Graph g = gen_grid(static_cast<int>(state.range(0)));
    const Ordering ord = Ordering::identity(g.vertex_count());
    for (auto _ : state) benchmark::DoNotOptimize(min_consistent_partition(g, ord, true));
}
BENCHMARK(BM_MinConsistentPartition)->DenseRange(3, 9, 2);

void BM_ThinnessExact(benchmark::State& state) {
    const Graph g = gen_complement_matching(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(thinness_exact(g));
}
BENCHMARK(BM_ThinnessExact)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
