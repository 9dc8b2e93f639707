#include <benchmark/benchmark.h>

#include "romank/kmn.hpp"
#include "romank/solve.hpp"
#include "romank/transforms.hpp"

using namespace romank;

static void BM_Validate(benchmark::State& state) {
    auto [g, labels] = complete_bipartite(5, 5);
    const WeightFunction f = uniform_upper_bound_function(g, 4);
    for (auto _ : state) {
        auto r = validate(g, f, Variant::strong);
        benchmark::DoNotOptimize(r.ok);
    }
}
BENCHMARK(BM_Validate);

static void BM_OraclePath(benchmark::State& state) {
    const Graph g = path(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto r = solve_oracle(g, 3, Variant::strong);
        benchmark::DoNotOptimize(r.value);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OraclePath)->Arg(5)->Arg(6)->Arg(7);

static void BM_BnbPath(benchmark::State& state) {
    const Graph g = path(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto r = solve_bnb(g, 3, Variant::strong);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_BnbPath)->Arg(5)->Arg(7)->Arg(10);

static void BM_BnbKmn(benchmark::State& state) {
    const Graph g = join(path(4), path(4));  // dense non-bipartite 8 vertices
    for (auto _ : state) {
        auto r = solve_bnb(g, static_cast<int>(state.range(0)), Variant::roman);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_BnbKmn)->Arg(2)->Arg(3)->Arg(4);

static void BM_Multiset(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto r = solve_kmn_multiset(6, 6, k, Variant::roman);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_Multiset)->Arg(4)->Arg(8)->Arg(16);

static void BM_PerfectFormula(benchmark::State& state) {
    for (auto _ : state) {
        auto fr = gamma_p_kmn(5, 6, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(fr.a);
    }
}
BENCHMARK(BM_PerfectFormula)->Arg(10)->Arg(100)->Arg(1000);

static void BM_GadgetPerfect(benchmark::State& state) {
    const Graph g = build_gadget({3, 2});
    for (auto _ : state) {
        auto r = solve_bnb(g, static_cast<int>(state.range(0)), Variant::perfect);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_GadgetPerfect)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
