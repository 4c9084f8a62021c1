#include <benchmark/benchmark.h>

#include "symgraph/automorphism.hpp"
#include "symgraph/cardinality.hpp"
#include "symgraph/quotient.hpp"
#include "symgraph/rewire.hpp"
#include "symgraph/wiring.hpp"

using namespace symgraph;

namespace {

QuotientGraph base_quotient() {
    return QuotientGraph({1, 2, 0}, {{0, 1, 2, 1}, {0, 2, 1, 2}});
}

GeneratedGraph realization(long long s) {
    auto q = base_quotient();
    return generate(q, scale(solve_minimal(build_system(q)), s));
}

void BM_Generate(benchmark::State& state) {
    auto q = base_quotient();
    auto sol = scale(solve_minimal(build_system(q)), state.range(0));
    for (auto _ : state) {
        auto gen = generate(q, sol);
        benchmark::DoNotOptimize(gen.graph.num_edges());
    }
}

void BM_Randomize(benchmark::State& state) {
    auto gen = realization(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto g = randomize(gen.graph, gen.partition, seed++, 10.0);
        benchmark::DoNotOptimize(g.num_edges());
    }
}

void BM_CoarsestEquitable(benchmark::State& state) {
    auto gen = realization(state.range(0));
    for (auto _ : state) {
        auto part = coarsest_equitable(gen.graph);
        benchmark::DoNotOptimize(part.num_clusters());
    }
}

void BM_Orbits(benchmark::State& state) {
    auto gen = realization(state.range(0));
    auto g = randomize(gen.graph, gen.partition, 1, 10.0);
    for (auto _ : state) {
        auto o = orbits(g);
        benchmark::DoNotOptimize(o.partition.num_clusters());
    }
}

}  // namespace

BENCHMARK(BM_Generate)->Arg(2)->Arg(8)->Arg(32);
BENCHMARK(BM_Randomize)->Arg(2)->Arg(8)->Arg(32);
BENCHMARK(BM_CoarsestEquitable)->Arg(2)->Arg(8)->Arg(32);
BENCHMARK(BM_Orbits)->Arg(2)->Arg(8);

BENCHMARK_MAIN();
