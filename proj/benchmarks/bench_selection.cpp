#include <benchmark/benchmark.h>

#include <vector>

#include "forgesim/assignment.hpp"
#include "forgesim/rng.hpp"

using namespace forgesim;

namespace {

std::vector<Developer> make_candidates(int n) {
    SimRng rng(1234);
    std::vector<Developer> candidates;
    candidates.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Developer d;
        d.id = i;
        d.concurrency_cap = 2;
        if (rng.uniform01() < 0.3) d.assignments.insert(900 + i);
        d.skills = {rng.uniform01(), rng.uniform01(), rng.uniform01()};
        candidates.push_back(d);
    }
    return candidates;
}

void BM_SelectTeamExhaustive(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    std::vector<Developer> candidates = make_candidates(n);
    GoalWeights weights{0.7, 0.3};
    for (auto _ : state) {
        TeamSelection team = select_team_exhaustive(candidates, k, weights);
        benchmark::DoNotOptimize(team.cost);
    }
}
BENCHMARK(BM_SelectTeamExhaustive)
    ->Args({12, 6})
    ->Args({20, 5})
    ->Args({46, 4})
    ->Args({46, 5});

void BM_SelectTeamAuto(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    std::vector<Developer> candidates = make_candidates(n);
    GoalWeights weights{0.7, 0.3};
    for (auto _ : state) {
        TeamSelection team = select_team(candidates, k, weights);
        benchmark::DoNotOptimize(team.cost);
    }
}
BENCHMARK(BM_SelectTeamAuto)
    ->Args({46, 4})   // largest exhaustive size at the default workforce
    ->Args({46, 5})   // first heuristic size: C(46,5) exceeds the limit
    ->Args({46, 10})
    ->Args({46, 23});  // worst-case combination count

void BM_TeamCost(benchmark::State& state) {
    std::vector<Developer> members = make_candidates(static_cast<int>(state.range(0)));
    GoalWeights weights{0.5, 0.5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(team_cost(members, weights));
    }
}
BENCHMARK(BM_TeamCost)->Arg(5)->Arg(10)->Arg(23);

}  // namespace
