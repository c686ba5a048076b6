#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "forgesim/domain.hpp"
#include "forgesim/engine.hpp"
#include "forgesim/metrics.hpp"

namespace forgesim {

// ---------------------------------------------------------------------------
// Replication harness: runs a scenario R times per policy mode under common
// random numbers (replication r uses seed base_seed + r in every mode) and
// aggregates interval estimates.
// ---------------------------------------------------------------------------

struct ExperimentConfig {
    int replications = 10;
    std::uint64_t base_seed = 42;
    std::vector<PolicyMode> modes{PolicyMode::Fifo, PolicyMode::Dynamic};
    double confidence = 0.95;
};

struct ModeResult {
    PolicyMode mode = PolicyMode::Fifo;
    std::vector<std::uint64_t> seeds;
    std::vector<ReplicationSummary> replications;
    std::vector<double> horizons;  // days simulated, per replication
    IntervalEstimate waiting;
    IntervalEstimate utilization;
    IntervalEstimate queue_length;
};

struct ExperimentResult {
    std::vector<ModeResult> modes;  // in config order

    const ModeResult* find(PolicyMode mode) const;
};

ExperimentResult run_experiment(const Scenario& scenario,
                                const ExperimentConfig& config);

// "mean±half_width" with 4 decimals; "mean±na" when n < 2.
std::string format_interval(const IntervalEstimate& e);

// Round-trippable decimal form (17 significant digits) for the
// machine-readable CSV files.
std::string format_exact(double v);

// Writes replications.csv and summary.csv into out_dir (created when
// missing). summary.csv gains an improvement_pct row per measure when both
// modes are present. Returns the paths written.
std::vector<std::string> write_experiment_files(const ExperimentResult& result,
                                                const std::string& out_dir);

// Writes plot_waiting_time.csv and plot_utilization.csv (one row per
// replication, fifo and dynamic columns). Requires both modes; throws
// std::runtime_error otherwise. Returns the paths written.
std::vector<std::string> write_plot_data(const ExperimentResult& result,
                                         const std::string& out_dir);

// Renders the summary table printed by the CLI after a run.
std::string render_summary_table(const ExperimentResult& result);

}  // namespace forgesim
