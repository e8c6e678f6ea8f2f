#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ddrsim::cli {

/// Exit statuses shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kConfigFailure = 1;  // bad config, bad input file, failed sweep cell
inline constexpr int kIoFailure = 2;

struct RunOptions {
    std::filesystem::path config;
    std::filesystem::path out_dir = ".";
    bool dump_plans = false;
    bool write_placement = false;
    std::optional<std::string> seed_override;  // DDRSIM_SEED
};

/// Writes trace.csv and summary.json (plus plans.jsonl / placement.csv on request).
int cmd_run(const RunOptions& options, std::ostream& log, std::ostream& err);

struct SweepOptions {
    std::filesystem::path spec;
    std::filesystem::path out_dir = ".";
    int jobs = 1;
    bool write_traces = false;
};

/// Writes summary_<key>.json per run and the aggregate sweep.csv.
int cmd_sweep(const SweepOptions& options, std::ostream& log, std::ostream& err);

enum class PlotMetric { alive, packets };

struct PlotOptions {
    std::vector<std::filesystem::path> traces;
    std::filesystem::path output = "plot.svg";
    PlotMetric metric = PlotMetric::alive;
    std::string title;
};

/// One series per trace. Labels come from a summary.json next to the trace
/// (or summary_<stem>.json for sweep traces), else the file stem.
int cmd_plot(const PlotOptions& options, std::ostream& log, std::ostream& err);

struct LayoutOptions {
    double field_side = 120.0;
    std::optional<double> ring_spacing;
    std::optional<int> ring_count;
    std::optional<std::filesystem::path> output;  // stdout when unset
};

int cmd_layout(const LayoutOptions& options, std::ostream& out, std::ostream& err);

struct AnalyzeOptions {
    std::filesystem::path config;
    double tolerance = 0.10;
    std::optional<std::filesystem::path> output;  // stdout when unset
    std::optional<std::string> seed_override;
};

int cmd_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err);

}  // namespace ddrsim::cli
