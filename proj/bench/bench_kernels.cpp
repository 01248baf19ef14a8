// Serial reference kernels against their OpenMP counterparts on the same inputs.

#include <benchmark/benchmark.h>

#include "pancyclic/generators.hpp"
#include "pancyclic/oracles.hpp"

using namespace pancyclic;
namespace ks = kernels::serial;
namespace kp = kernels::parallel;

namespace {

// Extremal k = 4 has no C_7, so the subset sweep and the DFS both run to exhaustion.
const Graph& extremal4()
{
    static const Graph g = gen_extremal(4);
    return g;
}

const Graph& random20()
{
    static const Graph g = [] {
        GeneratorConfig cfg;
        cfg.n = 20;
        cfg.k = 3;
        cfg.seed = 17;
        cfg.density = 0.15;
        return gen_random_bounded_alpha(cfg).graph;
    }();
    return g;
}

template <auto Kernel>
void subset_cycle(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(extremal4(), static_cast<int>(state.range(0)), 50'000'000));
}

template <auto Kernel>
void dfs_cycle(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(extremal4(), static_cast<int>(state.range(0)), 50'000'000));
}

template <auto Kernel>
void subset_dp(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(random20()));
}

} // namespace

BENCHMARK(subset_cycle<ks::subset_cycle>)->Name("subset_cycle/serial")->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(subset_cycle<kp::subset_cycle>)->Name("subset_cycle/parallel")->Arg(7)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(dfs_cycle<ks::dfs_cycle>)->Name("dfs_cycle/serial")->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(dfs_cycle<kp::dfs_cycle>)->Name("dfs_cycle/parallel")->Arg(7)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(subset_dp<ks::subset_dp_cycles>)->Name("subset_dp_cycles/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(subset_dp<kp::subset_dp_cycles>)->Name("subset_dp_cycles/parallel")->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
