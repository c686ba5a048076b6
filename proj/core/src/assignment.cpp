#include "forgesim/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace forgesim {

double slim_source_size(double c_k, double k_person_years, double t_d_years) {
    if (!(c_k > 0.0) || !(k_person_years > 0.0) || !(t_d_years > 0.0))
        throw std::invalid_argument("slim_source_size: inputs must be positive");
    return c_k * std::cbrt(k_person_years) *
           std::pow(t_d_years, 2.0 / 3.0);
}

double slim_effort(double s_s, double c_k, double t_d_years) {
    if (!(s_s > 0.0) || !(c_k > 0.0) || !(t_d_years > 0.0))
        throw std::invalid_argument("slim_effort: inputs must be positive");
    double base = s_s / (c_k * std::pow(t_d_years, 2.0 / 3.0));
    return base * base * base;
}

std::optional<int> required_headcount(double k_person_years, double t_d_years,
                                      int n_available) {
    if (!(k_person_years > 0.0) || !(t_d_years > 0.0))
        throw std::invalid_argument("required_headcount: inputs must be positive");
    // The relative slack keeps an effort that is an integer multiple of the
    // duration (up to floating-point noise, e.g. after a SLIM round trip)
    // from ceiling one head too high.
    double avg_staff = k_person_years / t_d_years;
    int k = std::max(1, static_cast<int>(std::ceil(avg_staff * (1.0 - 1e-9))));
    if (k > n_available) return std::nullopt;
    return k;
}

double load_cost(double w) {
    if (w < 0.0 || w > 1.0)
        throw std::invalid_argument("load_cost: workload outside [0, 1]");
    return w;
}

double skill_cost(double s) {
    if (s < 0.0 || s > 1.0)
        throw std::invalid_argument("skill_cost: skill outside [0, 1]");
    return 1.0 - s;
}

namespace {

double member_cost(const Developer& d, const GoalWeights& weights) {
    return weights.alpha * load_cost(d.workload()) +
           weights.beta * skill_cost(d.skill());
}

}  // namespace

double team_cost(const std::vector<Developer>& members,
                 const GoalWeights& weights) {
    if (members.empty())
        throw std::invalid_argument("team_cost: empty team");
    std::vector<const Developer*> ordered;
    ordered.reserve(members.size());
    for (const Developer& d : members) ordered.push_back(&d);
    std::sort(ordered.begin(), ordered.end(),
              [](const Developer* a, const Developer* b) { return a->id < b->id; });
    double total = 0.0;
    for (const Developer* d : ordered) total += member_cost(*d, weights);
    return total;
}

std::uint64_t combination_count(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    constexpr std::uint64_t kMax = std::numeric_limits<std::int64_t>::max();
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t numer = static_cast<std::uint64_t>(n - k + i);
        if (result > kMax / numer) return kMax;
        result = result * numer / static_cast<std::uint64_t>(i);
    }
    return result;
}

TeamSelection select_team_exhaustive(const std::vector<Developer>& candidates,
                                     int k, const GoalWeights& weights) {
    int n = static_cast<int>(candidates.size());
    if (k < 1 || k > n)
        throw std::invalid_argument("select_team_exhaustive: need 1 <= k <= " +
                                    std::to_string(n) + ", got k=" +
                                    std::to_string(k));

    std::vector<const Developer*> sorted;
    sorted.reserve(candidates.size());
    for (const Developer& d : candidates) sorted.push_back(&d);
    std::sort(sorted.begin(), sorted.end(),
              [](const Developer* a, const Developer* b) { return a->id < b->id; });

    std::vector<double> unit(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        unit[i] = member_cost(*sorted[i], weights);

    // Lexicographic enumeration over sorted ids; keeping only strictly
    // better costs makes the first minimum (the lexicographically smallest
    // id tuple) the winner on ties.
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);

    double best_cost = std::numeric_limits<double>::infinity();
    std::vector<int> best_idx;
    for (;;) {
        double cost = 0.0;
        for (int i : idx) cost += unit[i];
        if (cost < best_cost) {
            best_cost = cost;
            best_idx = idx;
        }
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }

    TeamSelection selection;
    selection.member_ids.reserve(best_idx.size());
    for (int i : best_idx) selection.member_ids.push_back(sorted[i]->id);
    selection.cost = best_cost;
    return selection;
}

namespace {

TeamSelection select_team_heuristic(const std::vector<Developer>& candidates,
                                    int k, const GoalWeights& weights) {
    std::vector<const Developer*> sorted;
    sorted.reserve(candidates.size());
    for (const Developer& d : candidates) sorted.push_back(&d);
    std::sort(sorted.begin(), sorted.end(),
              [](const Developer* a, const Developer* b) { return a->id < b->id; });

    // Greedy seed: the k individually cheapest developers (already optimal
    // while the cost is a sum of member terms).
    std::vector<std::size_t> order(sorted.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> unit(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        unit[i] = member_cost(*sorted[i], weights);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (unit[a] != unit[b]) return unit[a] < unit[b];
        return sorted[a]->id < sorted[b]->id;
    });

    std::vector<bool> in_team(sorted.size(), false);
    std::vector<std::size_t> team(order.begin(), order.begin() + k);
    for (std::size_t i : team) in_team[i] = true;

    auto cost_of = [&](const std::vector<std::size_t>& t) {
        std::vector<Developer> members;
        members.reserve(t.size());
        for (std::size_t i : t) members.push_back(*sorted[i]);
        return team_cost(members, weights);
    };

    // Best-improvement single swaps until a local minimum. The full
    // team_cost recompute keeps this correct for non-separable costs.
    double current = cost_of(team);
    for (;;) {
        double best = current;
        int best_out = -1;
        std::size_t best_in = 0;
        for (int m = 0; m < k; ++m) {
            for (std::size_t c = 0; c < sorted.size(); ++c) {
                if (in_team[c]) continue;
                std::vector<std::size_t> trial = team;
                trial[m] = c;
                double cost = cost_of(trial);
                if (cost < best) {
                    best = cost;
                    best_out = m;
                    best_in = c;
                }
            }
        }
        if (best_out < 0) break;
        in_team[team[best_out]] = false;
        in_team[best_in] = true;
        team[best_out] = best_in;
        current = best;
    }

    TeamSelection selection;
    selection.member_ids.reserve(team.size());
    for (std::size_t i : team) selection.member_ids.push_back(sorted[i]->id);
    std::sort(selection.member_ids.begin(), selection.member_ids.end());
    selection.cost = current;
    return selection;
}

}  // namespace

TeamSelection select_team(const std::vector<Developer>& candidates, int k,
                          const GoalWeights& weights,
                          std::uint64_t exhaustive_limit) {
    int n = static_cast<int>(candidates.size());
    if (k < 1 || k > n)
        throw std::invalid_argument("select_team: need 1 <= k <= " +
                                    std::to_string(n) + ", got k=" +
                                    std::to_string(k));
    if (combination_count(n, k) <= exhaustive_limit)
        return select_team_exhaustive(candidates, k, weights);
    return select_team_heuristic(candidates, k, weights);
}

double assign(Project& project, const TeamSelection& team,
              std::vector<Developer>& developers, double start_day) {
    if (project.status != ProjectStatus::OnHold)
        throw std::logic_error("assign: project " + std::to_string(project.id) +
                               " is not on hold");
    std::vector<Developer*> members;
    members.reserve(team.member_ids.size());
    for (int id : team.member_ids) {
        auto it = std::find_if(developers.begin(), developers.end(),
                               [id](const Developer& d) { return d.id == id; });
        if (it == developers.end())
            throw std::logic_error("assign: unknown developer " +
                                   std::to_string(id));
        if (!it->has_free_slot())
            throw std::logic_error("assign: developer " + std::to_string(id) +
                                   " has no free slot");
        members.push_back(&*it);
    }
    for (Developer* d : members) d->assignments.insert(project.id);
    project.status = ProjectStatus::Ongoing;
    return start_day + project.duration_days;
}

void release(Project& project, std::vector<Developer>& developers) {
    if (project.status != ProjectStatus::Ongoing)
        throw std::logic_error("release: project " + std::to_string(project.id) +
                               " is not ongoing");
    for (Developer& d : developers) d.assignments.erase(project.id);
    project.status = ProjectStatus::Finished;
}

}  // namespace forgesim
