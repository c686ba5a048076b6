#include "forgesim/scenario_gen.hpp"

#include <stdexcept>

#include "forgesim/engine.hpp"
#include "forgesim/rng.hpp"

namespace forgesim {

namespace {

constexpr double kDaysPerYear = 365.0;

void check_params(const GenParams& p) {
    auto fail = [](const char* msg) { throw std::invalid_argument(msg); };
    if (p.n_projects < 0) fail("gen_scenario: n_projects must be >= 0");
    if (p.n_developers < 0) fail("gen_scenario: n_developers must be >= 0");
    if (!(p.mean_interarrival_days > 0.0))
        fail("gen_scenario: mean_interarrival_days must be positive");
    if (!(p.horizon_days > 0.0)) fail("gen_scenario: horizon_days must be positive");
    if (!(p.duration_min_years > 0.0) ||
        p.duration_max_years < p.duration_min_years)
        fail("gen_scenario: need 0 < duration_min_years <= duration_max_years");
    if (!(p.slack_min > 0.0) || p.slack_max < p.slack_min)
        fail("gen_scenario: need 0 < slack_min <= slack_max");
    if (p.effort_min < 1 || p.effort_max < p.effort_min)
        fail("gen_scenario: need 1 <= effort_min <= effort_max");
    if (!(p.expertise_min > 0.0) || p.expertise_max < p.expertise_min)
        fail("gen_scenario: need 0 < expertise_min <= expertise_max");
    if (!(p.technology_constant > 0.0))
        fail("gen_scenario: technology_constant must be positive");
}

}  // namespace

Scenario gen_scenario(const GenParams& params, std::uint64_t seed) {
    check_params(params);

    SimRng rng(seed);
    Scenario s;
    s.horizon_days = params.horizon_days;
    s.mean_interarrival_days = params.mean_interarrival_days;
    s.slim.technology_constant = params.technology_constant;

    std::vector<double> arrivals =
        schedule_arrivals(rng, params.mean_interarrival_days, params.n_projects);

    s.projects.reserve(static_cast<std::size_t>(params.n_projects));
    for (int i = 0; i < params.n_projects; ++i) {
        Project p;
        p.id = i;
        p.arrival_day = arrivals[static_cast<std::size_t>(i)];

        double duration_years =
            rng.uniform(params.duration_min_years, params.duration_max_years);
        p.duration_days = duration_years * kDaysPerYear;

        p.priority = static_cast<Priority>(rng.uniform_int(1, 3));

        double slack = rng.uniform(params.slack_min, params.slack_max);
        p.deadline_day = p.arrival_day + p.duration_days * slack;

        p.estimated_effort = static_cast<double>(
            rng.uniform_int(params.effort_min, params.effort_max));
        p.expertise_level =
            rng.uniform(params.expertise_min, params.expertise_max);
        p.goal = rng.uniform_int(0, 1) == 0 ? ProjectGoal::TimeUrgent
                                            : ProjectGoal::QualityOriented;
        s.projects.push_back(p);
    }

    s.developers.reserve(static_cast<std::size_t>(params.n_developers));
    for (int i = 0; i < params.n_developers; ++i) {
        Developer d;
        d.id = i;
        d.skills.technical = rng.uniform01();
        d.skills.experience = rng.uniform01();
        d.skills.leadership = rng.uniform01();
        s.developers.push_back(d);
    }

    return s;
}

}  // namespace forgesim
