#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "forgesim/assignment.hpp"
#include "forgesim/domain.hpp"
#include "forgesim/rng.hpp"
#include "forgesim/scheduler.hpp"

namespace forgesim {

// ---------------------------------------------------------------------------
// Discrete-time engine coupling the scheduling model with the workforce
// assignment model: daily ticks, arrivals, stock-crossing releases, team
// formation, and completion. One engine instance owns its state; the
// replication harness runs many instances independently.
// ---------------------------------------------------------------------------

enum class PolicyMode { Dynamic, Fifo };

const char* to_string(PolicyMode m);

struct ProjectRecord {
    int project_id = 0;
    double arrival_day = 0.0;
    double start_day = -1.0;   // -1 until assigned
    double finish_day = -1.0;  // -1 until finished
    int team_size = 0;
};

struct DayTrace {
    int day = 0;
    int queue_length = 0;
    int busy_developers = 0;  // developers holding at least one assignment
};

// Where every unit of ProjectToStart stock went. Satisfies
//   inflow == started + discarded + final_stock   (up to fp accumulation)
// where refunds cancel the corresponding released units.
struct StockAccounting {
    double inflow = 0.0;  // sum of rate*dt
    int started = 0;      // units consumed by successful starts
    int refunded = 0;     // units returned by failed team formation
    int discarded = 0;    // queue-cap excess plus units unused after a bounce
    double final_stock = 0.0;
};

struct ActiveProject {
    TeamSelection team;
    double finish_day = 0.0;
};

struct EngineState {
    double clock_days = 0.0;
    SchedulerState scheduler;
    std::vector<Developer> developers;        // sorted by id
    std::map<int, Project> projects;
    std::vector<std::pair<double, int>> pending_arrivals;  // (day, id), ascending
    std::size_t next_arrival = 0;
    std::map<int, ActiveProject> ongoing;

    // run configuration
    SlimParams slim{};
    std::map<ProjectGoal, GoalWeights> goal_weights = default_goal_weights();
    PolicyWeights policy{};
    std::uint64_t rng_seed = 0;

    // result under construction
    std::map<int, ProjectRecord> records;
    std::vector<DayTrace> traces;
    std::vector<int> start_order;  // project ids in assignment order
    StockAccounting stock{};
    int infeasible_returns = 0;
    int finished_count = 0;
};

struct RunResult {
    std::vector<ProjectRecord> records;  // ascending project id
    std::vector<DayTrace> traces;        // one entry per simulated day
    double horizon_days = 0.0;           // days actually simulated
    std::vector<int> start_order;
    StockAccounting stock{};
    int infeasible_returns = 0;
    std::uint64_t seed = 0;
    std::string rng_algorithm;
};

struct ScenarioValidationError : std::runtime_error {
    explicit ScenarioValidationError(std::vector<Violation> v);
    std::vector<Violation> violations;
};

struct LivelockError : std::runtime_error {
    LivelockError(std::string msg, std::vector<int> stuck_ids)
        : std::runtime_error(std::move(msg)), stuck(std::move(stuck_ids)) {}
    std::vector<int> stuck;
};

struct RunOptions {
    // Redraw arrival days from the run seed (the common-random-numbers
    // channel between paired Fifo/Dynamic runs). Deadlines shift with the
    // new arrivals so each project keeps its scenario-given slack. When
    // false the scenario's arrival/deadline fields are used verbatim.
    bool resample_arrivals = true;

    // Hard cap: clock <= max_days_factor * horizon_days, then LivelockError.
    double max_days_factor = 100.0;

    // Invoked after each tick's traces are recorded (invariant checks).
    std::function<void(const EngineState&)> tick_observer;
};

// n_total cumulative sums of independent exponential gaps with the given
// mean. Deterministic per rng state.
std::vector<double> schedule_arrivals(SimRng& rng, double mean_interarrival_days,
                                      int n_total);

// Recomputes the rate equations from the current workforce and queue,
// stores them in the scheduler state, and reorders the waiting queue.
// Does not advance the stock; the daily tick does.
void handle_check_scheduling(EngineState& state);

// One day: admit arrivals, finish due projects, integrate the stock,
// start projects for each released unit (SLIM sizing + team selection;
// failed formation returns the project to the queue head and refunds one
// stock unit), record traces, advance the clock.
void step_day(EngineState& state);

// Builds the initial engine state for a validated scenario.
EngineState init_engine(const Scenario& scenario, PolicyMode mode,
                        std::uint64_t seed, const RunOptions& options = {});

// Runs until every project is finished. Throws ScenarioValidationError on
// an invalid scenario and LivelockError (naming the stuck projects) if the
// day cap is exceeded. Deterministic per (scenario, mode, seed).
RunResult run(const Scenario& scenario, PolicyMode mode, std::uint64_t seed,
              const RunOptions& options = {});

}  // namespace forgesim
