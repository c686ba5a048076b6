#pragma once

#include <stdexcept>
#include <string>

#include "forgesim/domain.hpp"

namespace forgesim {

// ---------------------------------------------------------------------------
// Scenario persistence. JSON with an explicit schema_version; unknown keys
// are rejected so typos surface instead of silently using defaults.
// ---------------------------------------------------------------------------

inline constexpr int kScenarioSchemaVersion = 1;

struct ScenarioFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string scenario_to_json(const Scenario& scenario, int indent = 2);
Scenario scenario_from_json(const std::string& text);

void save_scenario(const Scenario& scenario, const std::string& path);
Scenario load_scenario(const std::string& path);

}  // namespace forgesim
