#include "forgesim/domain.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace forgesim {

const char* to_string(Priority p) {
    switch (p) {
        case Priority::Low: return "low";
        case Priority::Medium: return "medium";
        case Priority::High: return "high";
    }
    return "unknown";
}

const char* to_string(ProjectGoal g) {
    switch (g) {
        case ProjectGoal::TimeUrgent: return "time_urgent";
        case ProjectGoal::QualityOriented: return "quality_oriented";
    }
    return "unknown";
}

const char* to_string(ProjectStatus s) {
    switch (s) {
        case ProjectStatus::Waiting: return "waiting";
        case ProjectStatus::OnHold: return "on_hold";
        case ProjectStatus::Ongoing: return "ongoing";
        case ProjectStatus::Finished: return "finished";
    }
    return "unknown";
}

double scalar_skill(const SkillVector& v) {
    return (v.technical + v.experience + v.leadership) / 3.0;
}

std::map<ProjectGoal, GoalWeights> default_goal_weights() {
    return {
        {ProjectGoal::TimeUrgent, GoalWeights{0.7, 0.3}},
        {ProjectGoal::QualityOriented, GoalWeights{0.3, 0.7}},
    };
}

namespace {

constexpr double kSlimTechnologyLow = 610.0;
constexpr double kSlimTechnologyHigh = 57314.0;
constexpr double kWeightSumTolerance = 1e-9;

std::string subject_of(const char* kind, int id) {
    std::ostringstream os;
    os << kind << ' ' << id;
    return os.str();
}

bool in_unit_interval(double x) { return x >= 0.0 && x <= 1.0; }

}  // namespace

std::vector<Violation> validate_scenario(const Scenario& s) {
    std::vector<Violation> out;
    auto error = [&](std::string subject, std::string message) {
        out.push_back({Severity::Error, std::move(subject), std::move(message)});
    };
    auto warning = [&](std::string subject, std::string message) {
        out.push_back({Severity::Warning, std::move(subject), std::move(message)});
    };

    if (!(s.horizon_days > 0.0))
        error("scenario", "horizon_days must be positive");
    if (!(s.mean_interarrival_days > 0.0))
        error("scenario", "mean_interarrival_days must be positive");
    if (!(s.slim.technology_constant > 0.0)) {
        error("scenario", "technology_constant must be positive");
    } else if (s.slim.technology_constant < kSlimTechnologyLow ||
               s.slim.technology_constant > kSlimTechnologyHigh) {
        warning("scenario", "technology_constant outside the usual range [610, 57314]");
    }

    for (auto goal : {ProjectGoal::TimeUrgent, ProjectGoal::QualityOriented}) {
        auto it = s.goal_weights.find(goal);
        if (it == s.goal_weights.end()) {
            error("scenario",
                  std::string("missing goal weights for ") + to_string(goal));
            continue;
        }
        const GoalWeights& w = it->second;
        if (w.alpha < 0.0 || w.beta < 0.0)
            error("scenario",
                  std::string("goal weights for ") + to_string(goal) +
                      " must be nonnegative");
        else if (std::abs(w.alpha + w.beta - 1.0) > kWeightSumTolerance)
            error("scenario", std::string("goal weights for ") + to_string(goal) +
                                  " must sum to 1");
    }

    if (s.policy.w_priority < 0.0 || s.policy.w_urgency < 0.0 ||
        s.policy.w_effort < 0.0 || s.policy.w_skill_match < 0.0)
        error("scenario", "policy weights must be nonnegative");
    if (!(s.policy.epsilon_days > 0.0))
        error("scenario", "policy epsilon_days must be positive");

    std::set<int> project_ids;
    double total_skill = 0.0;
    for (const Developer& d : s.developers) total_skill += d.skill();

    for (const Project& p : s.projects) {
        const std::string subject = subject_of("project", p.id);
        if (p.id < 0) error(subject, "id must be nonnegative");
        if (!project_ids.insert(p.id).second) error(subject, "duplicate id");
        if (p.arrival_day < 0.0) error(subject, "arrival_day must be nonnegative");
        if (!(p.deadline_day > p.arrival_day))
            error(subject, "deadline_day must be after arrival_day");
        if (!(p.estimated_effort > 0.0))
            error(subject, "estimated_effort must be positive");
        if (!(p.expertise_level > 0.0))
            error(subject, "expertise_level must be positive");
        if (!(p.duration_days > 0.0))
            error(subject, "duration_days must be positive");
        if (p.source_size < 0.0) error(subject, "source_size must be nonnegative");
        if (p.status != ProjectStatus::Waiting)
            error(subject, "initial status must be waiting");
        if (p.expertise_level > total_skill)
            error(subject,
                  "expertise_level exceeds the total skill of the workforce; "
                  "the project can never be scheduled");
    }

    std::set<int> developer_ids;
    for (const Developer& d : s.developers) {
        const std::string subject = subject_of("developer", d.id);
        if (d.id < 0) error(subject, "id must be nonnegative");
        if (!developer_ids.insert(d.id).second) error(subject, "duplicate id");
        if (d.concurrency_cap < 1) error(subject, "concurrency_cap must be >= 1");
        if (static_cast<int>(d.assignments.size()) > d.concurrency_cap)
            error(subject, "more assignments than concurrency_cap");
        if (!d.assignments.empty())
            error(subject, "initial assignments must be empty");
        if (!in_unit_interval(d.skills.technical) ||
            !in_unit_interval(d.skills.experience) ||
            !in_unit_interval(d.skills.leadership))
            error(subject, "skill components must lie in [0, 1]");
    }

    if (!s.projects.empty() && s.developers.empty())
        error("scenario", "projects present but no developers");

    return out;
}

bool scenario_ok(const std::vector<Violation>& report) {
    for (const Violation& v : report)
        if (v.severity == Severity::Error) return false;
    return true;
}

}  // namespace forgesim
