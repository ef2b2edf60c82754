#include <benchmark/benchmark.h>

#include "negcurv/bench.hpp"
#include "negcurv/eigen.hpp"
#include "negcurv/partial.hpp"
#include "negcurv/random.hpp"
#include "negcurv/seeker.hpp"

namespace {

using namespace negcurv;

SymMatrix sample(std::size_t n, std::size_t negatives) {
    Rng rng = case_rng(1, "bench");
    return generate_synthetic({n, negatives, 100000}, rng);
}

void BM_MinEigenvalue(benchmark::State& state) {
    const auto a = sample(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(min_eigenvalue(a));
}
BENCHMARK(BM_MinEigenvalue)->DenseRange(4, 16, 4);

void BM_SeekPositiveDefinite(benchmark::State& state) {
    const auto a = sample(static_cast<std::size_t>(state.range(0)), 0);
    const auto order = variant_order(a.diag(), VariantSpec::parse("ordered/build2"));
    for (auto _ : state) {
        ExactOracle o(a);
        benchmark::DoNotOptimize(seek(o, order).lambda);
    }
}
BENCHMARK(BM_SeekPositiveDefinite)->DenseRange(4, 16, 4);

void BM_SeekVariant(benchmark::State& state) {
    const auto a = sample(10, 1);
    const auto v = all_variants()[static_cast<std::size_t>(state.range(0))];
    state.SetLabel(v.name());
    const auto order = variant_order(a.diag(), v);
    for (auto _ : state) {
        ExactOracle o(a);
        benchmark::DoNotOptimize(seek(o, order).iterations);
    }
}
BENCHMARK(BM_SeekVariant)->DenseRange(0, 7);

void BM_MaximalCliques(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    FillGraph g(n);
    Rng rng(3);
    std::bernoulli_distribution coin(0.6);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (coin(rng) || (i == 1 && j == 0)) g.add_edge(i, j);
    for (auto _ : state) benchmark::DoNotOptimize(maximal_cliques_with_edge(g, 1, 0).size());
}
BENCHMARK(BM_MaximalCliques)->RangeMultiplier(2)->Range(8, 64);

void BM_ExhaustiveAllPairs(benchmark::State& state) {
    const auto a = sample(4, 1);
    for (auto _ : state) benchmark::DoNotOptimize(exhaustive_compare(a, EnumerationMode::AllPairOrders).gap);
}
BENCHMARK(BM_ExhaustiveAllPairs);

}  // namespace

BENCHMARK_MAIN();
