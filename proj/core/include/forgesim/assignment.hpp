#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "forgesim/domain.hpp"

namespace forgesim {

// ---------------------------------------------------------------------------
// Agent-based workforce assignment: SLIM sizing, the team-formation cost,
// optimal team selection, and the assignment/release state updates.
// ---------------------------------------------------------------------------

// Putnam SLIM macro model: S_s = C_k * K^(1/3) * t_d^(2/3).
// Throws std::invalid_argument on nonpositive inputs.
double slim_source_size(double c_k, double k_person_years, double t_d_years);

// Inverse of slim_source_size: K = (S_s / (C_k * t_d^(2/3)))^3.
double slim_effort(double s_s, double c_k, double t_d_years);

// Headcount from life-cycle effort under average staffing:
// ceil(K / t_d), clamped to >= 1. Returns nullopt when the result exceeds
// n_available (infeasible team; the caller requeues the project).
std::optional<int> required_headcount(double k_person_years, double t_d_years,
                                      int n_available);

// Workload-to-cost mapping f: cost rises with load. Input in [0,1].
double load_cost(double w);

// Skill-to-cost mapping g: cost falls with skill. Input in [0,1].
double skill_cost(double s);

// Sum over members of alpha*f(w_i) + beta*g(s_i). Members are summed in
// ascending id order so equal teams always produce bit-identical costs.
// Throws std::invalid_argument on an empty team.
double team_cost(const std::vector<Developer>& members, const GoalWeights& weights);

struct TeamSelection {
    int project_id = -1;
    std::vector<int> member_ids;  // ascending
    double cost = 0.0;
};

// Enumerates all C(|candidates|, k) combinations and returns the minimum
// team cost; ties broken by the lexicographically smallest sorted id tuple.
// Throws std::invalid_argument unless 1 <= k <= |candidates|.
TeamSelection select_team_exhaustive(const std::vector<Developer>& candidates,
                                     int k, const GoalWeights& weights);

// Exhaustive when C(|candidates|, k) <= exhaustive_limit, otherwise a greedy
// seed (k lowest individual costs) refined by best-improvement pairwise
// swaps. The seed is already optimal for separable costs; the swap phase
// covers future non-separable cost mappings.
TeamSelection select_team(const std::vector<Developer>& candidates, int k,
                          const GoalWeights& weights,
                          std::uint64_t exhaustive_limit = 1'000'000);

// C(n, k) saturated at 2^63-1, for the exhaustive/heuristic decision.
std::uint64_t combination_count(int n, int k);

// Puts the project on every member's plate: each member gains one
// assignment slot, the project becomes Ongoing. Returns the finish day
// (start_day + duration). Throws std::logic_error if the project is not
// OnHold or a member has no free slot.
double assign(Project& project, const TeamSelection& team,
              std::vector<Developer>& developers, double start_day);

// Drops the project from every developer holding it and marks it Finished.
// Throws std::logic_error unless the project is Ongoing.
void release(Project& project, std::vector<Developer>& developers);

}  // namespace forgesim
