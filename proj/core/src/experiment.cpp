#include "forgesim/experiment.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace forgesim {

const ModeResult* ExperimentResult::find(PolicyMode mode) const {
    for (const ModeResult& m : modes)
        if (m.mode == mode) return &m;
    return nullptr;
}

namespace {

IntervalEstimate estimate(const std::vector<double>& values, double confidence) {
    if (values.size() < 2) {
        IntervalEstimate e;
        e.n = values.size();
        e.confidence = confidence;
        for (double v : values) e.mean += v;
        if (!values.empty()) e.mean /= static_cast<double>(values.size());
        return e;
    }
    return summarize(values, confidence);
}

}  // namespace

ExperimentResult run_experiment(const Scenario& scenario,
                                const ExperimentConfig& config) {
    if (config.replications < 1)
        throw std::invalid_argument("run_experiment: replications must be >= 1");
    if (config.modes.empty())
        throw std::invalid_argument("run_experiment: no modes selected");

    const int n_developers = static_cast<int>(scenario.developers.size());

    ExperimentResult result;
    for (PolicyMode mode : config.modes) {
        ModeResult mr;
        mr.mode = mode;
        std::vector<double> waits, utils, queues;
        for (int r = 0; r < config.replications; ++r) {
            std::uint64_t seed = config.base_seed + static_cast<std::uint64_t>(r);
            RunResult run_result = [&] {
                try {
                    return run(scenario, mode, seed);
                } catch (const std::exception& e) {
                    std::ostringstream os;
                    os << to_string(mode) << " replication " << r << " (seed "
                       << seed << ") failed: " << e.what();
                    throw std::runtime_error(os.str());
                }
            }();
            ReplicationSummary summary = summarize_run(run_result, n_developers);
            mr.seeds.push_back(seed);
            mr.replications.push_back(summary);
            mr.horizons.push_back(run_result.horizon_days);
            waits.push_back(summary.avg_waiting_days);
            utils.push_back(summary.avg_utilization);
            queues.push_back(summary.avg_queue_length);
        }
        mr.waiting = estimate(waits, config.confidence);
        mr.utilization = estimate(utils, config.confidence);
        mr.queue_length = estimate(queues, config.confidence);
        result.modes.push_back(std::move(mr));
    }
    return result;
}

std::string format_interval(const IntervalEstimate& e) {
    char buf[64];
    if (e.n < 2) {
        std::snprintf(buf, sizeof(buf), "%.4f", e.mean);
        return std::string(buf) + "±na";
    }
    std::snprintf(buf, sizeof(buf), "%.4f", e.mean);
    std::string out(buf);
    std::snprintf(buf, sizeof(buf), "%.4f", e.half_width);
    return out + "±" + buf;
}

std::string format_exact(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string format_pct(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

// A zero baseline (a workload where nothing ever waits or queues) leaves
// the relative improvement undefined; such cells render as na.
std::string improvement_cell(double baseline, double treated) {
    if (baseline == 0.0) return "na";
    return format_pct(improvement_pct(baseline, treated));
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace

std::vector<std::string> write_experiment_files(const ExperimentResult& result,
                                                const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    std::vector<std::string> written;

    std::ostringstream reps;
    reps << "mode,replication,seed,avg_waiting_days,avg_utilization,"
            "avg_queue_length,horizon_days\n";
    for (const ModeResult& m : result.modes) {
        for (std::size_t r = 0; r < m.replications.size(); ++r) {
            const ReplicationSummary& s = m.replications[r];
            reps << to_string(m.mode) << ',' << r << ',' << m.seeds[r] << ','
                 << format_exact(s.avg_waiting_days) << ','
                 << format_exact(s.avg_utilization) << ','
                 << format_exact(s.avg_queue_length) << ','
                 << format_exact(m.horizons[r]) << '\n';
        }
    }
    std::string reps_path =
        (std::filesystem::path(out_dir) / "replications.csv").string();
    write_file(reps_path, reps.str());
    written.push_back(reps_path);

    std::ostringstream summary;
    summary << "mode,avg_waiting_days,avg_utilization,avg_queue_length\n";
    for (const ModeResult& m : result.modes)
        summary << to_string(m.mode) << ',' << format_interval(m.waiting) << ','
                << format_interval(m.utilization) << ','
                << format_interval(m.queue_length) << '\n';

    const ModeResult* fifo = result.find(PolicyMode::Fifo);
    const ModeResult* dynamic = result.find(PolicyMode::Dynamic);
    if (fifo && dynamic) {
        summary << "improvement_pct,"
                << improvement_cell(fifo->waiting.mean, dynamic->waiting.mean)
                << ','
                << improvement_cell(fifo->utilization.mean,
                                    dynamic->utilization.mean)
                << ','
                << improvement_cell(fifo->queue_length.mean,
                                    dynamic->queue_length.mean)
                << '\n';
    }
    std::string summary_path =
        (std::filesystem::path(out_dir) / "summary.csv").string();
    write_file(summary_path, summary.str());
    written.push_back(summary_path);

    return written;
}

std::vector<std::string> write_plot_data(const ExperimentResult& result,
                                         const std::string& out_dir) {
    const ModeResult* fifo = result.find(PolicyMode::Fifo);
    const ModeResult* dynamic = result.find(PolicyMode::Dynamic);
    if (!fifo || !dynamic)
        throw std::runtime_error(
            "plot data needs both fifo and dynamic results");
    if (fifo->replications.size() != dynamic->replications.size())
        throw std::runtime_error(
            "plot data needs equal replication counts per mode");

    std::filesystem::create_directories(out_dir);
    std::vector<std::string> written;

    std::ostringstream waiting;
    waiting << "replication,fifo_avg_waiting_days,dynamic_avg_waiting_days\n";
    for (std::size_t r = 0; r < fifo->replications.size(); ++r)
        waiting << r << ','
                << format_exact(fifo->replications[r].avg_waiting_days) << ','
                << format_exact(dynamic->replications[r].avg_waiting_days)
                << '\n';
    std::string waiting_path =
        (std::filesystem::path(out_dir) / "plot_waiting_time.csv").string();
    write_file(waiting_path, waiting.str());
    written.push_back(waiting_path);

    std::ostringstream util;
    util << "replication,fifo_avg_utilization,dynamic_avg_utilization\n";
    for (std::size_t r = 0; r < fifo->replications.size(); ++r)
        util << r << ',' << format_exact(fifo->replications[r].avg_utilization)
             << ',' << format_exact(dynamic->replications[r].avg_utilization)
             << '\n';
    std::string util_path =
        (std::filesystem::path(out_dir) / "plot_utilization.csv").string();
    write_file(util_path, util.str());
    written.push_back(util_path);

    return written;
}

std::string render_summary_table(const ExperimentResult& result) {
    // Pads by display columns, not bytes: the ± sign is two bytes wide but
    // occupies one terminal cell.
    auto pad = [](const std::string& s, std::size_t width) {
        std::size_t cells = s.size();
        for (std::size_t at = s.find("±"); at != std::string::npos;
             at = s.find("±", at + 2))
            --cells;
        return s + std::string(cells < width ? width - cells : 1, ' ');
    };

    std::ostringstream os;
    os << pad("mode", 8) << pad("avg_waiting_days", 17)
       << pad("avg_utilization", 16) << "avg_queue_length\n";
    for (const ModeResult& m : result.modes)
        os << pad(to_string(m.mode), 8) << pad(format_interval(m.waiting), 17)
           << pad(format_interval(m.utilization), 16)
           << format_interval(m.queue_length) << '\n';

    const ModeResult* fifo = result.find(PolicyMode::Fifo);
    const ModeResult* dynamic = result.find(PolicyMode::Dynamic);
    if (fifo && dynamic) {
        auto cell = [](double baseline, double treated) {
            std::string c = improvement_cell(baseline, treated);
            return c == "na" ? c : c + "%";
        };
        os << pad("improv.", 8)
           << pad(cell(fifo->waiting.mean, dynamic->waiting.mean), 17)
           << pad(cell(fifo->utilization.mean, dynamic->utilization.mean), 16)
           << cell(fifo->queue_length.mean, dynamic->queue_length.mean)
           << '\n';
    }
    return os.str();
}

}  // namespace forgesim
