#include <benchmark/benchmark.h>

#include "forgesim/engine.hpp"
#include "forgesim/metrics.hpp"
#include "forgesim/scenario_gen.hpp"

using namespace forgesim;

namespace {

void BM_FullRun(benchmark::State& state) {
    GenParams params;
    params.n_projects = static_cast<int>(state.range(0));
    Scenario scenario = gen_scenario(params, 12345);
    PolicyMode mode = state.range(1) ? PolicyMode::Dynamic : PolicyMode::Fifo;
    for (auto _ : state) {
        RunResult r = run(scenario, mode, 42);
        benchmark::DoNotOptimize(r.start_order.data());
    }
    state.SetLabel(to_string(mode));
}
BENCHMARK(BM_FullRun)
    ->Args({30, 0})
    ->Args({30, 1})
    ->Args({100, 0})
    ->Args({100, 1})
    ->Unit(benchmark::kMillisecond);

void BM_ScenarioGeneration(benchmark::State& state) {
    GenParams params;
    params.n_projects = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Scenario s = gen_scenario(params, 12345);
        benchmark::DoNotOptimize(s.projects.data());
    }
}
BENCHMARK(BM_ScenarioGeneration)->Arg(30)->Arg(1000);

void BM_SummarizeRun(benchmark::State& state) {
    GenParams params;
    Scenario scenario = gen_scenario(params, 12345);
    RunResult r = run(scenario, PolicyMode::Dynamic, 42);
    for (auto _ : state) {
        ReplicationSummary s =
            summarize_run(r, static_cast<int>(scenario.developers.size()));
        benchmark::DoNotOptimize(s.avg_waiting_days);
    }
}
BENCHMARK(BM_SummarizeRun);

}  // namespace

BENCHMARK_MAIN();
