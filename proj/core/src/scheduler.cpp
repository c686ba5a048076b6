#include "forgesim/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace forgesim {

double available_workforce(const std::vector<Developer>& developers) {
    double total = 0.0;
    for (const Developer& d : developers) total += 1.0 - d.workload();
    return total;
}

double available_skill(const std::vector<Developer>& developers) {
    double total = 0.0;
    for (const Developer& d : developers)
        if (d.has_free_slot()) total += d.skill();
    return total;
}

double workforce_based_rate(const std::vector<Project>& waiting,
                            const std::vector<Developer>& developers) {
    if (waiting.empty()) return 0.0;
    double total_effort = 0.0;
    for (const Project& p : waiting) total_effort += p.estimated_effort;
    if (total_effort <= 0.0) return 0.0;
    return available_workforce(developers) / total_effort *
           static_cast<double>(waiting.size());
}

double skill_based_rate(const std::vector<Project>& waiting,
                        const std::vector<Developer>& developers) {
    if (waiting.empty()) return 0.0;
    double total_expertise = 0.0;
    for (const Project& p : waiting) total_expertise += p.expertise_level;
    if (total_expertise <= 0.0) return 0.0;
    return available_skill(developers) / total_expertise *
           static_cast<double>(waiting.size());
}

double schedule_rate(double workforce_rate, double skill_rate) {
    return (workforce_rate + skill_rate) / 2.0;
}

StockStep advance_stock(double stock, double rate, double dt_days) {
    double raw = stock + rate * dt_days;
    double whole = std::floor(raw);
    StockStep step;
    step.released = static_cast<int>(whole);
    step.stock_after = raw - whole;
    return step;
}

double priority_score(const Project& p, double t_days,
                      const std::vector<Developer>& developers,
                      const PolicyWeights& policy) {
    double score = 0.0;

    if (policy.w_priority != 0.0)
        score += policy.w_priority * priority_rank(p.priority) / 3.0;

    if (policy.w_urgency != 0.0) {
        double slack = p.deadline_day - t_days;
        double urgency =
            policy.epsilon_days / std::max(slack, policy.epsilon_days);
        score += policy.w_urgency * std::min(1.0, urgency);
    }

    if (policy.w_effort != 0.0)
        score += policy.w_effort * std::min(1.0, 1.0 / p.estimated_effort);

    if (policy.w_skill_match != 0.0) {
        double match = available_skill(developers) / p.expertise_level;
        score += policy.w_skill_match * std::min(1.0, match);
    }

    return score;
}

void reorder_queue(SchedulerState& state, double t_days,
                   const std::map<int, Project>& projects,
                   const std::vector<Developer>& developers,
                   const PolicyWeights& policy) {
    if (policy.all_zero() || state.waiting_queue.size() < 2) return;

    struct Entry {
        int id;
        double score;
        double arrival;
    };
    std::vector<Entry> entries;
    entries.reserve(state.waiting_queue.size());
    for (int id : state.waiting_queue) {
        const Project& p = projects.at(id);
        entries.push_back({id, priority_score(p, t_days, developers, policy),
                           p.arrival_day});
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) {
                         if (a.score != b.score) return a.score > b.score;
                         if (a.arrival != b.arrival) return a.arrival < b.arrival;
                         return a.id < b.id;
                     });
    for (std::size_t i = 0; i < entries.size(); ++i)
        state.waiting_queue[i] = entries[i].id;
}

void enqueue(SchedulerState& state, int project_id) {
    for (int id : state.waiting_queue)
        if (id == project_id)
            throw std::logic_error("project " + std::to_string(project_id) +
                                   " is already queued");
    state.waiting_queue.push_back(project_id);
}

}  // namespace forgesim
