#pragma once

#include <cstddef>
#include <vector>

#include "forgesim/engine.hpp"

namespace forgesim {

// ---------------------------------------------------------------------------
// Per-run performance measures and cross-replication interval estimates.
// ---------------------------------------------------------------------------

struct ReplicationSummary {
    double avg_waiting_days = 0.0;
    double avg_utilization = 0.0;   // fraction in [0, 1]
    double avg_queue_length = 0.0;  // time-averaged
};

struct IntervalEstimate {
    double mean = 0.0;
    double half_width = 0.0;  // meaningless when n < 2; render as unavailable
    std::size_t n = 0;
    double confidence = 0.95;
};

// Mean of (start - arrival) over projects that started. Throws
// std::invalid_argument when no project ever started (undefined mean).
double avg_waiting_time(const RunResult& result);

// Busy developer-days divided by (n_developers * horizon). A developer is
// busy on a day when holding at least one assignment. Throws
// std::invalid_argument on a zero horizon or an empty workforce.
double avg_utilization(const RunResult& result, int n_developers);

// Mean of the per-day queue length trace. Throws std::invalid_argument on
// a zero horizon (no traces).
double time_avg_queue_length(const RunResult& result);

ReplicationSummary summarize_run(const RunResult& result, int n_developers);

// Two-sided Student-t critical value, t_{(1+confidence)/2, dof}.
double student_t_quantile(double confidence, std::size_t dof);

// Sample mean with a Student-t confidence interval half-width
// t * s / sqrt(n). Throws std::invalid_argument when n < 2; callers that
// accept single-replication runs must special-case that themselves.
IntervalEstimate summarize(const std::vector<double>& values,
                           double confidence = 0.95);

// 100 * (baseline - treated) / baseline. Positive when treated is lower
// (an improvement for waiting time and queue length).
double improvement_pct(double baseline, double treated);

}  // namespace forgesim
