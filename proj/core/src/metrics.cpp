#include "forgesim/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

namespace forgesim {

double avg_waiting_time(const RunResult& result) {
    double total = 0.0;
    std::size_t n = 0;
    for (const ProjectRecord& r : result.records) {
        if (r.start_day < 0.0) continue;
        total += r.start_day - r.arrival_day;
        ++n;
    }
    if (n == 0)
        throw std::invalid_argument("avg_waiting_time: no started projects");
    return total / static_cast<double>(n);
}

double avg_utilization(const RunResult& result, int n_developers) {
    if (n_developers <= 0)
        throw std::invalid_argument("avg_utilization: no developers");
    if (result.horizon_days <= 0.0)
        throw std::invalid_argument("avg_utilization: zero horizon");
    double busy_days = 0.0;
    for (const DayTrace& t : result.traces) busy_days += t.busy_developers;
    return busy_days / (static_cast<double>(n_developers) * result.horizon_days);
}

double time_avg_queue_length(const RunResult& result) {
    if (result.traces.empty())
        throw std::invalid_argument("time_avg_queue_length: zero horizon");
    double total = 0.0;
    for (const DayTrace& t : result.traces) total += t.queue_length;
    return total / static_cast<double>(result.traces.size());
}

ReplicationSummary summarize_run(const RunResult& result, int n_developers) {
    return ReplicationSummary{avg_waiting_time(result),
                              avg_utilization(result, n_developers),
                              time_avg_queue_length(result)};
}

double student_t_quantile(double confidence, std::size_t dof) {
    if (!(confidence > 0.0) || !(confidence < 1.0))
        throw std::invalid_argument("student_t_quantile: confidence outside (0, 1)");
    if (dof == 0)
        throw std::invalid_argument("student_t_quantile: zero degrees of freedom");
    boost::math::students_t dist(static_cast<double>(dof));
    return boost::math::quantile(dist, 0.5 * (1.0 + confidence));
}

IntervalEstimate summarize(const std::vector<double>& values, double confidence) {
    if (values.size() < 2)
        throw std::invalid_argument(
            "summarize: need at least 2 values for a confidence interval");

    IntervalEstimate e;
    e.n = values.size();
    e.confidence = confidence;

    double total = 0.0;
    for (double v : values) total += v;
    e.mean = total / static_cast<double>(e.n);

    double ss = 0.0;
    for (double v : values) {
        double d = v - e.mean;
        ss += d * d;
    }
    double stddev = std::sqrt(ss / static_cast<double>(e.n - 1));
    double t = student_t_quantile(confidence, e.n - 1);
    e.half_width = t * stddev / std::sqrt(static_cast<double>(e.n));
    return e;
}

double improvement_pct(double baseline, double treated) {
    if (baseline == 0.0)
        throw std::invalid_argument("improvement_pct: zero baseline");
    return 100.0 * (baseline - treated) / baseline;
}

}  // namespace forgesim
