#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "forgesim/engine.hpp"
#include "forgesim/experiment.hpp"
#include "forgesim/scenario_gen.hpp"
#include "forgesim/scenario_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

// Bad input (scenario files, flag values, config) exits 1; failures while
// running (livelock, I/O) exit 2.
struct ValidationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_gen_options(CLI::App& cmd, forgesim::GenParams& params) {
    cmd.add_option("--projects", params.n_projects, "number of projects")
        ->capture_default_str();
    cmd.add_option("--developers", params.n_developers, "number of developers")
        ->capture_default_str();
    cmd.add_option("--interarrival", params.mean_interarrival_days,
                   "mean interarrival gap, days")
        ->capture_default_str();
    cmd.add_option("--horizon", params.horizon_days,
                   "arrival-window horizon, days")
        ->capture_default_str();
    cmd.add_option("--duration-min", params.duration_min_years,
                   "minimum project duration, years")
        ->capture_default_str();
    cmd.add_option("--duration-max", params.duration_max_years,
                   "maximum project duration, years")
        ->capture_default_str();
    cmd.add_option("--slack-min", params.slack_min,
                   "minimum deadline slack factor")
        ->capture_default_str();
    cmd.add_option("--slack-max", params.slack_max,
                   "maximum deadline slack factor")
        ->capture_default_str();
    cmd.add_option("--effort-min", params.effort_min,
                   "minimum estimated effort, person-years")
        ->capture_default_str();
    cmd.add_option("--effort-max", params.effort_max,
                   "maximum estimated effort, person-years")
        ->capture_default_str();
    cmd.add_option("--expertise-min", params.expertise_min,
                   "minimum required expertise")
        ->capture_default_str();
    cmd.add_option("--expertise-max", params.expertise_max,
                   "maximum required expertise")
        ->capture_default_str();
    cmd.add_option("--technology-constant", params.technology_constant,
                   "SLIM technology constant")
        ->capture_default_str();
}

void report_validation(const forgesim::Scenario& scenario) {
    auto report = forgesim::validate_scenario(scenario);
    for (const forgesim::Violation& v : report)
        if (v.severity == forgesim::Severity::Warning)
            std::cerr << "warning: " << v.subject << ": " << v.message << "\n";
    if (!forgesim::scenario_ok(report)) {
        std::ostringstream os;
        os << "scenario is invalid:";
        for (const forgesim::Violation& v : report)
            if (v.severity == forgesim::Severity::Error)
                os << "\n  " << v.subject << ": " << v.message;
        throw ValidationFailure(os.str());
    }
}

std::vector<forgesim::PolicyMode> parse_modes(
    const std::vector<std::string>& names) {
    std::vector<forgesim::PolicyMode> modes;
    for (const std::string& name : names) {
        if (name == "fifo")
            modes.push_back(forgesim::PolicyMode::Fifo);
        else if (name == "dynamic")
            modes.push_back(forgesim::PolicyMode::Dynamic);
        else
            throw ValidationFailure("unknown mode '" + name +
                                    "' (expected fifo or dynamic)");
    }
    return modes;
}

// --- plot-data: re-emit per-replication values verbatim ---------------------

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ',')) fields.push_back(field);
    return fields;
}

// Emits plot files by copying value strings straight out of
// replications.csv, so plot values match that file byte for byte.
void emit_plot_data(const std::string& in_dir, const std::string& out_dir) {
    std::string reps_path =
        (std::filesystem::path(in_dir) / "replications.csv").string();
    std::ifstream in(reps_path);
    if (!in)
        throw std::runtime_error("cannot open '" + reps_path +
                                 "' (run the 'run' subcommand first)");

    std::string header;
    if (!std::getline(in, header))
        throw std::runtime_error("'" + reps_path + "' is empty");
    std::vector<std::string> columns = split_csv_line(header);
    auto column = [&](const std::string& name) {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name) return i;
        throw std::runtime_error("'" + reps_path + "' lacks column '" + name +
                                 "'");
    };
    const std::size_t mode_col = column("mode");
    const std::size_t rep_col = column("replication");
    const std::size_t wait_col = column("avg_waiting_days");
    const std::size_t util_col = column("avg_utilization");

    struct Row {
        std::string replication, waiting, utilization;
    };
    std::vector<Row> fifo_rows, dynamic_rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != columns.size())
            throw std::runtime_error("'" + reps_path + "' has a malformed row: " +
                                     line);
        Row row{fields[rep_col], fields[wait_col], fields[util_col]};
        if (fields[mode_col] == "fifo")
            fifo_rows.push_back(row);
        else if (fields[mode_col] == "dynamic")
            dynamic_rows.push_back(row);
        else
            throw std::runtime_error("'" + reps_path + "' has unknown mode '" +
                                     fields[mode_col] + "'");
    }
    if (fifo_rows.empty() || dynamic_rows.empty())
        throw std::runtime_error(
            "plot data needs both fifo and dynamic rows in " + reps_path);
    if (fifo_rows.size() != dynamic_rows.size())
        throw std::runtime_error("unequal replication counts in " + reps_path);

    std::filesystem::create_directories(out_dir);
    auto write = [&](const char* file, const char* metric,
                     const std::string Row::*member) {
        std::string path = (std::filesystem::path(out_dir) / file).string();
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot open '" + path + "' for writing");
        out << "replication,fifo_" << metric << ",dynamic_" << metric << "\n";
        for (std::size_t r = 0; r < fifo_rows.size(); ++r) {
            if (fifo_rows[r].replication != dynamic_rows[r].replication)
                throw std::runtime_error("replication indices disagree in " +
                                         reps_path);
            out << fifo_rows[r].replication << ',' << fifo_rows[r].*member
                << ',' << dynamic_rows[r].*member << '\n';
        }
        std::cout << "wrote " << path << "\n";
    };
    write("plot_waiting_time.csv", "avg_waiting_days", &Row::waiting);
    write("plot_utilization.csv", "avg_utilization", &Row::utilization);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "forgesim: hybrid project-scheduling and workforce-assignment "
        "simulator"};
    app.require_subcommand(1);

    // gen-scenario
    forgesim::GenParams gen_params;
    std::uint64_t gen_seed = 12345;
    std::string gen_out = "scenario.json";
    CLI::App* gen = app.add_subcommand("gen-scenario",
                                       "generate a synthetic scenario file");
    add_gen_options(*gen, gen_params);
    gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
    gen->add_option("--out", gen_out, "output scenario path")
        ->capture_default_str();

    // run
    forgesim::GenParams run_gen_params;
    std::uint64_t run_gen_seed = 12345;
    std::string scenario_path;
    forgesim::ExperimentConfig config;
    std::vector<std::string> mode_names{"fifo", "dynamic"};
    std::string out_dir = "results";
    CLI::App* run_cmd = app.add_subcommand(
        "run", "run the replication experiment and write result tables");
    run_cmd->add_option("--scenario", scenario_path,
                        "scenario file (omit to generate one)");
    add_gen_options(*run_cmd, run_gen_params);
    run_cmd->add_option("--gen-seed", run_gen_seed,
                        "seed for the generated scenario when --scenario is "
                        "not given")
        ->capture_default_str();
    run_cmd->add_option("--replications", config.replications,
                        "replications per mode")
        ->capture_default_str();
    run_cmd->add_option("--base-seed", config.base_seed,
                        "replication r runs with seed base-seed + r")
        ->capture_default_str();
    run_cmd
        ->add_option("--modes", mode_names,
                     "policy modes to run (fifo, dynamic)")
        ->delimiter(',')
        ->capture_default_str();
    run_cmd->add_option("--out-dir", out_dir, "output directory")
        ->capture_default_str();

    // plot-data
    std::string plot_in_dir = "results";
    std::string plot_out_dir;
    CLI::App* plot = app.add_subcommand(
        "plot-data", "derive per-replication paired series from run outputs");
    plot->add_option("--in-dir", plot_in_dir,
                     "directory holding replications.csv")
        ->capture_default_str();
    plot->add_option("--out-dir", plot_out_dir,
                     "output directory (default: --in-dir)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitRuntime;
    }

    try {
        if (gen->parsed()) {
            forgesim::Scenario scenario =
                forgesim::gen_scenario(gen_params, gen_seed);
            report_validation(scenario);
            forgesim::save_scenario(scenario, gen_out);
            std::cout << "wrote " << gen_out << " (seed " << gen_seed << ")\n";
        } else if (run_cmd->parsed()) {
            config.modes = parse_modes(mode_names);
            forgesim::Scenario scenario;
            if (!scenario_path.empty()) {
                scenario = forgesim::load_scenario(scenario_path);
                std::cout << "scenario: " << scenario_path << "\n";
            } else {
                scenario = forgesim::gen_scenario(run_gen_params, run_gen_seed);
                std::cout << "scenario: generated (seed " << run_gen_seed
                          << ")\n";
            }
            report_validation(scenario);

            forgesim::ExperimentResult result =
                forgesim::run_experiment(scenario, config);
            std::vector<std::string> files =
                forgesim::write_experiment_files(result, out_dir);

            std::cout << "base_seed: " << config.base_seed << "\n"
                      << "replications: " << config.replications << "\n"
                      << "rng: " << forgesim::SimRng::kAlgorithmId << "\n\n"
                      << forgesim::render_summary_table(result) << "\n";
            for (const std::string& f : files) std::cout << "wrote " << f << "\n";
        } else if (plot->parsed()) {
            emit_plot_data(plot_in_dir,
                           plot_out_dir.empty() ? plot_in_dir : plot_out_dir);
        }
    } catch (const ValidationFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const forgesim::ScenarioValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const forgesim::ScenarioFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}
