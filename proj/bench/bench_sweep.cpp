// Serial reference kernel vs OpenMP kernel on the default 201x201 maps and a
// denser grid. Run: ./build/bench/bench_sweep

#include <benchmark/benchmark.h>

#include <omp.h>

#include "mdqd/sweep.hpp"
#include "mdqd/thermo.hpp"

namespace {

mdqd::GridSpec grid(mdqd::Branch branch, std::size_t steps)
{
    mdqd::GridSpec spec;
    spec.branch = branch;
    spec.strength = {0.0, 1.0, steps};
    spec.epsilon = {0.1, 3.0, steps};
    spec.temperature = 2.0;
    spec.tau = 0.1;
    return spec;
}

void BM_SweepSerial(benchmark::State& state)
{
    const auto spec = grid(static_cast<mdqd::Branch>(state.range(1)), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(mdqd::run_sweep_serial(spec));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(spec.cell_count()));
}

void BM_SweepOpenMP(benchmark::State& state)
{
    const auto spec = grid(static_cast<mdqd::Branch>(state.range(1)), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(mdqd::run_sweep_parallel(spec));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(spec.cell_count()));
    state.counters["threads"] = omp_get_max_threads();
}

// Per-cycle cost of the two ledger routes.
void BM_CycleMatrix(benchmark::State& state)
{
    const mdqd::CycleInputs in{{1.0, 0.5}, 2.0, 0.7, 0.3};
    for (auto _ : state)
        benchmark::DoNotOptimize(mdqd::run_cycle_matrix(in));
}

void BM_CycleClosedForm(benchmark::State& state)
{
    const mdqd::CycleInputs in{{1.0, 0.5}, 2.0, 0.7, 0.3};
    for (auto _ : state)
        benchmark::DoNotOptimize(mdqd::run_cycle_closed_form(in));
}

} // namespace

BENCHMARK(BM_SweepSerial)->ArgsProduct({{201, 801}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepOpenMP)->ArgsProduct({{201, 801}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CycleMatrix);
BENCHMARK(BM_CycleClosedForm);

BENCHMARK_MAIN();
