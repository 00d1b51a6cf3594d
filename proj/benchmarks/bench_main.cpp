#include <itlab/census.hpp>
#include <itlab/exact.hpp>
#include <itlab/lll.hpp>
#include <itlab/nibble.hpp>
#include <itlab/random_nkrs.hpp>
#include <itlab/upper_bound.hpp>

#include <benchmark/benchmark.h>

using namespace itlab;

static void BM_ExactNoTransversal(benchmark::State & state)
{
    auto k = static_cast<std::size_t>(state.range(0));
    auto g = assemble_upper_bound_instance(k, 2, 1, 0).graph;
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        auto res = exact_find(g);
        nodes = res.nodes;
        benchmark::DoNotOptimize(res);
    }
    state.counters["parts"] = static_cast<double>(g.num_parts());
    state.counters["placements"] = static_cast<double>(nodes);
}
BENCHMARK(BM_ExactNoTransversal)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

static void BM_ExactRandom(benchmark::State & state)
{
    auto n = static_cast<std::size_t>(state.range(0));
    auto g = random_nkrs(n, 12, 2, 1, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_find(g));
}
BENCHMARK(BM_ExactRandom)->Arg(72)->Arg(120)->Unit(benchmark::kMillisecond);

static void BM_LllSample(benchmark::State & state)
{
    auto n = static_cast<std::size_t>(state.range(0));
    auto g = random_nkrs(n, 20, 2, 1, 2);
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(lll_sample(g, default_lll_rounds(g), seed++));
}
BENCHMARK(BM_LllSample)->Arg(40)->Arg(70)->Unit(benchmark::kMicrosecond);

static void BM_Nibble(benchmark::State & state)
{
    auto n = static_cast<std::size_t>(state.range(0));
    auto k = static_cast<std::size_t>(state.range(1));
    auto g = random_nkrs(n, k, 2, 1, 3);
    NibbleConfig cfg;
    cfg.check_invariants = false;
    for (auto _ : state) {
        auto res = nibble_solve(g, cfg);
        benchmark::DoNotOptimize(res);
        ++cfg.seed;
    }
}
BENCHMARK(BM_Nibble)->Args({300, 30})->Args({1200, 60})->Unit(benchmark::kMillisecond);

static void BM_RandomNkrs(benchmark::State & state)
{
    auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(random_nkrs(n, 60, 2, 1, seed++));
}
BENCHMARK(BM_RandomNkrs)->Arg(300)->Arg(1200)->Unit(benchmark::kMillisecond);

static void BM_MatchingCensus(benchmark::State & state)
{
    auto g = random_nkrs(static_cast<std::size_t>(state.range(0)), 6, 3, 2, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(matching_census(g));
}
BENCHMARK(BM_MatchingCensus)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
