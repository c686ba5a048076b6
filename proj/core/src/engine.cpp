#include "forgesim/engine.hpp"

#include <algorithm>
#include <sstream>

namespace forgesim {

const char* to_string(PolicyMode m) {
    switch (m) {
        case PolicyMode::Dynamic: return "dynamic";
        case PolicyMode::Fifo: return "fifo";
    }
    return "unknown";
}

namespace {

std::string violations_message(const std::vector<Violation>& violations) {
    std::ostringstream os;
    os << "invalid scenario:";
    for (const Violation& v : violations) {
        if (v.severity != Severity::Error) continue;
        os << "\n  " << v.subject << ": " << v.message;
    }
    return os.str();
}

}  // namespace

ScenarioValidationError::ScenarioValidationError(std::vector<Violation> v)
    : std::runtime_error(violations_message(v)), violations(std::move(v)) {}

std::vector<double> schedule_arrivals(SimRng& rng, double mean_interarrival_days,
                                      int n_total) {
    std::vector<double> days;
    days.reserve(static_cast<std::size_t>(std::max(0, n_total)));
    double t = 0.0;
    for (int i = 0; i < n_total; ++i) {
        t += rng.exponential(mean_interarrival_days);
        days.push_back(t);
    }
    return days;
}

void handle_check_scheduling(EngineState& state) {
    std::vector<Project> waiting;
    waiting.reserve(state.scheduler.waiting_queue.size());
    for (int id : state.scheduler.waiting_queue)
        waiting.push_back(state.projects.at(id));

    state.scheduler.last_workforce_rate =
        workforce_based_rate(waiting, state.developers);
    state.scheduler.last_skill_rate =
        skill_based_rate(waiting, state.developers);
    state.scheduler.last_schedule_rate = schedule_rate(
        state.scheduler.last_workforce_rate, state.scheduler.last_skill_rate);

    reorder_queue(state.scheduler, state.clock_days, state.projects,
                  state.developers, state.policy);
}

namespace {

constexpr double kDaysPerYear = 365.0;

// Pops queue heads for each released stock unit. A project whose team
// cannot be formed (headcount exceeds the free developers) goes back to
// the queue head with one stock unit refunded; the remaining units are
// discarded rather than spent on later projects, preserving queue order.
void start_released_projects(EngineState& state, int released) {
    bool any_started = false;
    int remaining = released;
    while (remaining > 0 && !state.scheduler.waiting_queue.empty()) {
        --remaining;
        int pid = state.scheduler.waiting_queue.front();
        state.scheduler.waiting_queue.erase(state.scheduler.waiting_queue.begin());
        Project& project = state.projects.at(pid);
        project.status = ProjectStatus::OnHold;

        // A source-size override drives the effort through the SLIM inverse;
        // otherwise the estimate is the effort, with no size round trip to
        // pick up floating-point noise on the way.
        double t_d_years = project.duration_days / kDaysPerYear;
        double effort_py =
            project.source_size > 0.0
                ? slim_effort(project.source_size,
                              state.slim.technology_constant, t_d_years)
                : project.estimated_effort;

        std::vector<Developer> candidates;
        for (const Developer& d : state.developers)
            if (d.has_free_slot()) candidates.push_back(d);

        std::optional<int> headcount = required_headcount(
            effort_py, t_d_years, static_cast<int>(candidates.size()));
        if (!headcount) {
            project.status = ProjectStatus::Waiting;
            state.scheduler.waiting_queue.insert(
                state.scheduler.waiting_queue.begin(), pid);
            state.scheduler.project_to_start_stock += 1.0;
            state.stock.refunded += 1;
            state.infeasible_returns += 1;
            break;
        }

        TeamSelection team = select_team(
            candidates, *headcount, state.goal_weights.at(project.goal));
        team.project_id = pid;
        double finish_day =
            assign(project, team, state.developers, state.clock_days);
        state.ongoing[pid] = ActiveProject{team, finish_day};

        ProjectRecord& record = state.records.at(pid);
        record.start_day = state.clock_days;
        record.team_size = *headcount;
        state.start_order.push_back(pid);
        state.stock.started += 1;
        any_started = true;
    }
    state.stock.discarded += remaining;
    if (any_started) handle_check_scheduling(state);
}

}  // namespace

void step_day(EngineState& state) {
    // Arrivals whose day has come enter the queue.
    while (state.next_arrival < state.pending_arrivals.size() &&
           state.pending_arrivals[state.next_arrival].first <=
               state.clock_days) {
        int pid = state.pending_arrivals[state.next_arrival].second;
        ++state.next_arrival;
        enqueue(state.scheduler, pid);
        handle_check_scheduling(state);
    }

    // Completions free their teams.
    std::vector<int> due;
    for (const auto& [pid, active] : state.ongoing)
        if (active.finish_day <= state.clock_days) due.push_back(pid);
    for (int pid : due) {
        Project& project = state.projects.at(pid);
        release(project, state.developers);
        state.records.at(pid).finish_day = state.ongoing.at(pid).finish_day;
        state.ongoing.erase(pid);
        ++state.finished_count;
        handle_check_scheduling(state);
    }

    // Stock integration over dt = 1 day with freshly computed rates.
    std::vector<Project> waiting;
    waiting.reserve(state.scheduler.waiting_queue.size());
    for (int id : state.scheduler.waiting_queue)
        waiting.push_back(state.projects.at(id));
    double wf_rate = workforce_based_rate(waiting, state.developers);
    double sk_rate = skill_based_rate(waiting, state.developers);
    double rate = schedule_rate(wf_rate, sk_rate);
    state.scheduler.last_workforce_rate = wf_rate;
    state.scheduler.last_skill_rate = sk_rate;
    state.scheduler.last_schedule_rate = rate;

    StockStep step =
        advance_stock(state.scheduler.project_to_start_stock, rate, 1.0);
    state.stock.inflow += rate;
    state.scheduler.project_to_start_stock = step.stock_after;

    int queue_len = static_cast<int>(state.scheduler.waiting_queue.size());
    int to_start = std::min(step.released, queue_len);
    state.stock.discarded += step.released - to_start;
    if (to_start > 0) start_released_projects(state, to_start);

    state.traces.push_back(DayTrace{
        static_cast<int>(state.clock_days),
        static_cast<int>(state.scheduler.waiting_queue.size()),
        static_cast<int>(std::count_if(
            state.developers.begin(), state.developers.end(),
            [](const Developer& d) { return !d.assignments.empty(); }))});

    state.clock_days += 1.0;
}

EngineState init_engine(const Scenario& scenario, PolicyMode mode,
                        std::uint64_t seed, const RunOptions& options) {
    auto report = validate_scenario(scenario);
    if (!scenario_ok(report)) throw ScenarioValidationError(std::move(report));

    EngineState state;
    state.developers = scenario.developers;
    std::sort(state.developers.begin(), state.developers.end(),
              [](const Developer& a, const Developer& b) { return a.id < b.id; });
    state.slim = scenario.slim;
    state.goal_weights = scenario.goal_weights;
    state.policy =
        mode == PolicyMode::Fifo ? PolicyWeights::fifo() : scenario.policy;
    state.rng_seed = seed;

    for (const Project& p : scenario.projects) state.projects[p.id] = p;

    if (options.resample_arrivals && !state.projects.empty()) {
        SimRng rng(seed);
        std::vector<double> days = schedule_arrivals(
            rng, scenario.mean_interarrival_days,
            static_cast<int>(state.projects.size()));
        std::size_t i = 0;
        for (auto& [pid, project] : state.projects) {
            double slack = project.deadline_day - project.arrival_day;
            project.arrival_day = days[i];
            project.deadline_day = days[i] + slack;
            ++i;
        }
    }

    for (const auto& [pid, project] : state.projects) {
        state.pending_arrivals.emplace_back(project.arrival_day, pid);
        ProjectRecord record;
        record.project_id = pid;
        record.arrival_day = project.arrival_day;
        state.records[pid] = record;
    }
    std::sort(state.pending_arrivals.begin(), state.pending_arrivals.end());

    return state;
}

RunResult run(const Scenario& scenario, PolicyMode mode, std::uint64_t seed,
              const RunOptions& options) {
    EngineState state = init_engine(scenario, mode, seed, options);
    const int total = static_cast<int>(state.projects.size());
    const double max_days = options.max_days_factor * scenario.horizon_days;

    while (state.finished_count < total) {
        if (state.clock_days > max_days) {
            std::vector<int> stuck;
            for (const auto& [pid, project] : state.projects)
                if (project.status != ProjectStatus::Finished)
                    stuck.push_back(pid);
            std::ostringstream os;
            os << "no progress after " << state.clock_days
               << " days; unfinished projects:";
            for (int pid : stuck) os << ' ' << pid;
            throw LivelockError(os.str(), std::move(stuck));
        }
        step_day(state);
        if (options.tick_observer) options.tick_observer(state);
    }

    RunResult result;
    result.records.reserve(state.records.size());
    for (const auto& [pid, record] : state.records) result.records.push_back(record);
    result.traces = std::move(state.traces);
    result.horizon_days = state.clock_days;
    result.start_order = std::move(state.start_order);
    result.stock = state.stock;
    result.stock.final_stock = state.scheduler.project_to_start_stock;
    result.infeasible_returns = state.infeasible_returns;
    result.seed = seed;
    result.rng_algorithm = SimRng::kAlgorithmId;
    return result;
}

}  // namespace forgesim
