#pragma once

#include <map>
#include <vector>

#include "forgesim/domain.hpp"

namespace forgesim {

// ---------------------------------------------------------------------------
// System-dynamics scheduling model: the waiting queue, the rate equations,
// the ProjectToStart stock, and the dynamic queue-reordering policy.
// All functions are pure over explicit state.
// ---------------------------------------------------------------------------

struct SchedulerState {
    std::vector<int> waiting_queue;       // project ids, head at front; N(t) = size
    double project_to_start_stock = 0.0;  // fractional remainder between ticks; a
                                          // failed team formation refunds one unit,
                                          // so it can sit at >= 1 until the retry
    double last_workforce_rate = 0.0;
    double last_skill_rate = 0.0;
    double last_schedule_rate = 0.0;
};

// Total remaining capacity in developer-units: sum of (1 - w_i).
double available_workforce(const std::vector<Developer>& developers);

// Sum of scalar skill over developers that still have a free slot
// (fully loaded developers contribute nothing).
double available_skill(const std::vector<Developer>& developers);

// AvailableWorkforce / sum(EstimatedEffort_i over waiting) * N.
// The empty-queue 0/0 is defined as 0: nothing waiting, nothing to schedule.
double workforce_based_rate(const std::vector<Project>& waiting,
                            const std::vector<Developer>& developers);

// AvailableSkill / sum(ExpertiseLevel_i over waiting) * N; 0 on empty queue.
double skill_based_rate(const std::vector<Project>& waiting,
                        const std::vector<Developer>& developers);

// Arithmetic mean of the two rates.
double schedule_rate(double workforce_rate, double skill_rate);

struct StockStep {
    double stock_after = 0.0;  // fractional remainder, in [0,1)
    int released = 0;          // integer crossings this step (uncapped)
};

// Integrates the stock by rate*dt and splits off the integer part.
// stock_after + released == stock + rate*dt. The caller caps `released`
// at the queue length and discards the excess.
StockStep advance_stock(double stock, double rate, double dt_days);

// Reordering score; higher means schedule earlier. Four terms, each
// normalized to [0,1]: institution priority, deadline urgency (reciprocal
// slack, floored at epsilon_days), effort (small efforts first), and the
// ratio of available skill to the project's required expertise.
double priority_score(const Project& p, double t_days,
                      const std::vector<Developer>& developers,
                      const PolicyWeights& policy);

// Sorts the waiting queue by descending priority_score; ties broken by
// earlier arrival_day, then smaller project id. The queue multiset is
// unchanged. With all-zero weights this is the identity on a queue that
// is already in arrival order.
void reorder_queue(SchedulerState& state, double t_days,
                   const std::map<int, Project>& projects,
                   const std::vector<Developer>& developers,
                   const PolicyWeights& policy);

// Appends at the tail. Throws std::logic_error on a duplicate id: the
// engine must never admit a project twice.
void enqueue(SchedulerState& state, int project_id);

}  // namespace forgesim
