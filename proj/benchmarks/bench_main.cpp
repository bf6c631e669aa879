#include <canonram/adversaries.hpp>
#include <canonram/colouring.hpp>
#include <canonram/cutnorm.hpp>
#include <canonram/graph.hpp>
#include <canonram/random.hpp>
#include <canonram/search.hpp>

#include <benchmark/benchmark.h>

#include <memory>

using namespace canonram;

static void BM_CountK4(benchmark::State& state) {
    const auto g = gnp_generate(static_cast<Vertex>(state.range(0)), 0.5, 1).graph;
    for (auto _ : state) benchmark::DoNotOptimize(count_cliques(g, 4));
}
BENCHMARK(BM_CountK4)->Arg(32)->Arg(64)->Arg(128);

static void BM_Clean(benchmark::State& state) {
    const auto g = gnp_generate(static_cast<Vertex>(state.range(0)), 0.3, 2).graph;
    for (auto _ : state) benchmark::DoNotOptimize(clean_subgraph(g, 4));
}
BENCHMARK(BM_Clean)->Arg(50)->Arg(100);

static void BM_CutnormExact(benchmark::State& state) {
    const Vertex n = static_cast<Vertex>(state.range(0));
    Rng rng(3);
    WeightedGraph f(n);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) f.set(u, v, 2 * uniform01(rng) - 1);
    for (auto _ : state) benchmark::DoNotOptimize(cutnorm_exact(f));
}
BENCHMARK(BM_CutnormExact)->Arg(10)->Arg(14)->Arg(18);

static void BM_ClassifyCopy(benchmark::State& state) {
    auto g = std::make_shared<const OrderedGraph>(OrderedGraph::complete(static_cast<Vertex>(state.range(0))));
    AdversarySpec spec;
    spec.kind = AdversaryKind::RandomR;
    spec.r = 3;
    const auto phi = generate_colouring(g, spec);
    std::vector<Vertex> tuple(static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 0; i < tuple.size(); ++i) tuple[i] = static_cast<Vertex>(i + 1);
    for (auto _ : state) benchmark::DoNotOptimize(classify_copy(phi, tuple));
}
BENCHMARK(BM_ClassifyCopy)->Arg(4)->Arg(6)->Arg(8);

static void BM_RainbowSearch(benchmark::State& state) {
    auto g = std::make_shared<const OrderedGraph>(gnp_generate(static_cast<Vertex>(state.range(0)), 0.2, 4).graph);
    AdversarySpec spec;
    spec.kind = AdversaryKind::GreedyProper;
    const auto phi = generate_colouring(g, spec);
    for (auto _ : state) benchmark::DoNotOptimize(find_rainbow_copy(phi, 4));
}
BENCHMARK(BM_RainbowSearch)->Arg(60)->Arg(120);

BENCHMARK_MAIN();
