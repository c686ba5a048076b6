#pragma once

#include <cstdint>

#include "forgesim/domain.hpp"

namespace forgesim {

// ---------------------------------------------------------------------------
// Synthetic scenario generation. Every knob is a plain field so callers
// (CLI flags, tests) can override any single distribution parameter.
// ---------------------------------------------------------------------------

struct GenParams {
    int n_projects = 30;
    int n_developers = 46;

    double mean_interarrival_days = 30.0;
    double horizon_days = 1095.0;

    // project duration, years (uniform), converted to days
    double duration_min_years = 0.3;
    double duration_max_years = 0.7;

    // deadline = arrival + duration_days * slack, slack uniform
    double slack_min = 1.5;
    double slack_max = 3.0;

    // estimated effort, person-years (integer uniform, inclusive). The
    // default range loads 46 developers to the point where queues form;
    // below ~7 py the workforce absorbs every arrival on sight and the
    // policy comparison degenerates.
    int effort_min = 1;
    int effort_max = 13;

    // required expertise level (uniform)
    double expertise_min = 0.5;
    double expertise_max = 2.5;

    double technology_constant = 2000.0;
};

// Deterministic per (params, seed). Draw order is fixed: all arrival gaps
// first, then per project duration, priority, slack, effort, expertise,
// goal; then per developer the three skill components.
Scenario gen_scenario(const GenParams& params, std::uint64_t seed);

}  // namespace forgesim
