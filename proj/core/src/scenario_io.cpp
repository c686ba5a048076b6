#include "forgesim/scenario_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace forgesim {

namespace {

using nlohmann::json;

// --- enum codecs -----------------------------------------------------------

Priority priority_from(const std::string& s) {
    if (s == "low") return Priority::Low;
    if (s == "medium") return Priority::Medium;
    if (s == "high") return Priority::High;
    throw ScenarioFormatError("unknown priority '" + s + "'");
}

ProjectGoal goal_from(const std::string& s) {
    if (s == "time_urgent") return ProjectGoal::TimeUrgent;
    if (s == "quality_oriented") return ProjectGoal::QualityOriented;
    throw ScenarioFormatError("unknown goal '" + s + "'");
}

// --- strict field access ---------------------------------------------------

void expect_keys(const json& obj, const std::string& where,
                 std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional = {}) {
    std::set<std::string> allowed;
    for (const char* k : required) allowed.insert(k);
    for (const char* k : optional) allowed.insert(k);
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!allowed.count(key))
            throw ScenarioFormatError(where + ": unknown key '" + key + "'");
    }
    for (const char* k : required)
        if (!obj.contains(k))
            throw ScenarioFormatError(where + ": missing key '" + std::string(k) +
                                      "'");
}

template <typename T>
T field(const json& obj, const std::string& where, const char* key) {
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ScenarioFormatError(where + ": bad value for '" + key +
                                  "': " + e.what());
    }
}

// --- per-type codecs -------------------------------------------------------

json project_to(const Project& p) {
    json j{{"id", p.id},
           {"priority", to_string(p.priority)},
           {"arrival_day", p.arrival_day},
           {"deadline_day", p.deadline_day},
           {"estimated_effort", p.estimated_effort},
           {"expertise_level", p.expertise_level},
           {"duration_days", p.duration_days},
           {"goal", to_string(p.goal)}};
    if (p.source_size > 0.0) j["source_size"] = p.source_size;
    return j;
}

Project project_from(const json& j, std::size_t index) {
    std::ostringstream where;
    where << "projects[" << index << "]";
    expect_keys(j, where.str(),
                {"id", "priority", "arrival_day", "deadline_day",
                 "estimated_effort", "expertise_level", "duration_days", "goal"},
                {"source_size"});
    Project p;
    p.id = field<int>(j, where.str(), "id");
    p.priority = priority_from(field<std::string>(j, where.str(), "priority"));
    p.arrival_day = field<double>(j, where.str(), "arrival_day");
    p.deadline_day = field<double>(j, where.str(), "deadline_day");
    p.estimated_effort = field<double>(j, where.str(), "estimated_effort");
    p.expertise_level = field<double>(j, where.str(), "expertise_level");
    p.duration_days = field<double>(j, where.str(), "duration_days");
    p.goal = goal_from(field<std::string>(j, where.str(), "goal"));
    if (j.contains("source_size"))
        p.source_size = field<double>(j, where.str(), "source_size");
    return p;
}

json developer_to(const Developer& d) {
    return json{{"id", d.id},
                {"skills",
                 {{"technical", d.skills.technical},
                  {"experience", d.skills.experience},
                  {"leadership", d.skills.leadership}}},
                {"concurrency_cap", d.concurrency_cap}};
}

Developer developer_from(const json& j, std::size_t index) {
    std::ostringstream where;
    where << "developers[" << index << "]";
    expect_keys(j, where.str(), {"id", "skills", "concurrency_cap"});
    Developer d;
    d.id = field<int>(j, where.str(), "id");
    const json& skills = j.at("skills");
    std::string skills_where = where.str() + ".skills";
    expect_keys(skills, skills_where, {"technical", "experience", "leadership"});
    d.skills.technical = field<double>(skills, skills_where, "technical");
    d.skills.experience = field<double>(skills, skills_where, "experience");
    d.skills.leadership = field<double>(skills, skills_where, "leadership");
    d.concurrency_cap = field<int>(j, where.str(), "concurrency_cap");
    return d;
}

}  // namespace

std::string scenario_to_json(const Scenario& scenario, int indent) {
    json j;
    j["schema_version"] = kScenarioSchemaVersion;
    j["horizon_days"] = scenario.horizon_days;
    j["mean_interarrival_days"] = scenario.mean_interarrival_days;
    j["slim"] = {{"technology_constant", scenario.slim.technology_constant}};

    json gw = json::object();
    for (const auto& [goal, weights] : scenario.goal_weights)
        gw[to_string(goal)] = {{"alpha", weights.alpha}, {"beta", weights.beta}};
    j["goal_weights"] = gw;

    j["policy"] = {{"w_priority", scenario.policy.w_priority},
                   {"w_urgency", scenario.policy.w_urgency},
                   {"w_effort", scenario.policy.w_effort},
                   {"w_skill_match", scenario.policy.w_skill_match},
                   {"epsilon_days", scenario.policy.epsilon_days}};

    j["projects"] = json::array();
    for (const Project& p : scenario.projects)
        j["projects"].push_back(project_to(p));

    j["developers"] = json::array();
    for (const Developer& d : scenario.developers)
        j["developers"].push_back(developer_to(d));

    return j.dump(indent) + "\n";
}

Scenario scenario_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ScenarioFormatError(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ScenarioFormatError("top level must be an object");
    expect_keys(j, "scenario",
                {"schema_version", "horizon_days", "mean_interarrival_days",
                 "slim", "goal_weights", "policy", "projects", "developers"});

    int version = field<int>(j, "scenario", "schema_version");
    if (version != kScenarioSchemaVersion)
        throw ScenarioFormatError("unsupported schema_version " +
                                  std::to_string(version) + " (expected " +
                                  std::to_string(kScenarioSchemaVersion) + ")");

    Scenario s;
    s.horizon_days = field<double>(j, "scenario", "horizon_days");
    s.mean_interarrival_days =
        field<double>(j, "scenario", "mean_interarrival_days");

    const json& slim = j.at("slim");
    expect_keys(slim, "slim", {"technology_constant"});
    s.slim.technology_constant = field<double>(slim, "slim", "technology_constant");

    const json& gw = j.at("goal_weights");
    expect_keys(gw, "goal_weights", {"time_urgent", "quality_oriented"});
    s.goal_weights.clear();
    for (auto goal : {ProjectGoal::TimeUrgent, ProjectGoal::QualityOriented}) {
        const json& w = gw.at(to_string(goal));
        std::string where = std::string("goal_weights.") + to_string(goal);
        expect_keys(w, where, {"alpha", "beta"});
        s.goal_weights[goal] = GoalWeights{field<double>(w, where, "alpha"),
                                           field<double>(w, where, "beta")};
    }

    const json& policy = j.at("policy");
    expect_keys(policy, "policy",
                {"w_priority", "w_urgency", "w_effort", "w_skill_match",
                 "epsilon_days"});
    s.policy.w_priority = field<double>(policy, "policy", "w_priority");
    s.policy.w_urgency = field<double>(policy, "policy", "w_urgency");
    s.policy.w_effort = field<double>(policy, "policy", "w_effort");
    s.policy.w_skill_match = field<double>(policy, "policy", "w_skill_match");
    s.policy.epsilon_days = field<double>(policy, "policy", "epsilon_days");

    const json& projects = j.at("projects");
    if (!projects.is_array())
        throw ScenarioFormatError("projects must be an array");
    for (std::size_t i = 0; i < projects.size(); ++i)
        s.projects.push_back(project_from(projects[i], i));

    const json& developers = j.at("developers");
    if (!developers.is_array())
        throw ScenarioFormatError("developers must be an array");
    for (std::size_t i = 0; i < developers.size(); ++i)
        s.developers.push_back(developer_from(developers[i], i));

    return s;
}

void save_scenario(const Scenario& scenario, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ScenarioFormatError("cannot open '" + path + "' for writing");
    out << scenario_to_json(scenario);
    if (!out) throw ScenarioFormatError("failed writing '" + path + "'");
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioFormatError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return scenario_from_json(buffer.str());
}

}  // namespace forgesim
