#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace forgesim {

// ---------------------------------------------------------------------------
// Shared domain types for the scheduling and workforce-assignment models.
// All types are plain values; the engine owns the only mutable copies.
// ---------------------------------------------------------------------------

enum class Priority { Low = 1, Medium = 2, High = 3 };

// Numeric rank used by the scheduling policy: High=3, Medium=2, Low=1.
inline int priority_rank(Priority p) { return static_cast<int>(p); }

enum class ProjectGoal { TimeUrgent, QualityOriented };

// Lifecycle: Waiting -> OnHold -> Ongoing -> Finished, with OnHold -> Waiting
// allowed when team formation fails and the project returns to the queue.
enum class ProjectStatus { Waiting, OnHold, Ongoing, Finished };

const char* to_string(Priority p);
const char* to_string(ProjectGoal g);
const char* to_string(ProjectStatus s);

struct SkillVector {
    double technical = 0.0;
    double experience = 0.0;
    double leadership = 0.0;
};

// Aggregates the three skill fields into the scalar s_i used by the
// assignment cost. Unweighted arithmetic mean, isolated here so the
// aggregation rule can be swapped in one place.
double scalar_skill(const SkillVector& v);

struct Developer {
    int id = 0;
    SkillVector skills{};
    std::set<int> assignments;  // project ids currently held
    int concurrency_cap = 2;

    // Workload w_i = |assignments| / concurrency_cap, in [0,1].
    double workload() const {
        return static_cast<double>(assignments.size()) / concurrency_cap;
    }
    double skill() const { return scalar_skill(skills); }
    bool has_free_slot() const {
        return static_cast<int>(assignments.size()) < concurrency_cap;
    }
};

struct Project {
    int id = 0;
    Priority priority = Priority::Medium;
    double arrival_day = 0.0;
    double deadline_day = 0.0;
    double estimated_effort = 1.0;  // life-cycle effort, person-years
    double expertise_level = 1.0;   // required aggregate skill, same scale as sum of s_i
    double duration_days = 1.0;
    ProjectGoal goal = ProjectGoal::TimeUrgent;
    ProjectStatus status = ProjectStatus::Waiting;
    double source_size = 0.0;       // delivered-source-size override; 0 = derive from effort
};

// Putnam SLIM parameters. Technology constants are typically in
// [610, 57314]; values outside that range validate with a warning.
struct SlimParams {
    double technology_constant = 2000.0;
};

// Relative importance of workload (alpha) vs. skill (beta) in the team
// formation cost. Normalized: alpha + beta = 1.
struct GoalWeights {
    double alpha = 0.5;
    double beta = 0.5;
};

// Weights of the four queue-reordering terms. All-zero weights disable the
// policy and the queue degenerates to FIFO.
struct PolicyWeights {
    double w_priority = 0.4;
    double w_urgency = 0.3;
    double w_effort = 0.15;
    double w_skill_match = 0.15;
    double epsilon_days = 1.0;  // urgency floor; keeps the slack reciprocal bounded

    bool all_zero() const {
        return w_priority == 0.0 && w_urgency == 0.0 && w_effort == 0.0 &&
               w_skill_match == 0.0;
    }
    static PolicyWeights fifo() { return PolicyWeights{0.0, 0.0, 0.0, 0.0, 1.0}; }
};

std::map<ProjectGoal, GoalWeights> default_goal_weights();

struct Scenario {
    std::vector<Project> projects;
    std::vector<Developer> developers;
    double horizon_days = 1095.0;
    double mean_interarrival_days = 30.0;
    SlimParams slim{};
    std::map<ProjectGoal, GoalWeights> goal_weights = default_goal_weights();
    PolicyWeights policy{};
};

// ---------------------------------------------------------------------------
// Validation. Violations are data, not failures: a scenario is runnable
// iff it has no Error-severity entries.
// ---------------------------------------------------------------------------

enum class Severity { Error, Warning };

struct Violation {
    Severity severity = Severity::Error;
    std::string subject;  // e.g. "project 7", "developer 3", "scenario"
    std::string message;
};

std::vector<Violation> validate_scenario(const Scenario& s);

// True when the report carries no Error entries (warnings are allowed).
bool scenario_ok(const std::vector<Violation>& report);

}  // namespace forgesim
