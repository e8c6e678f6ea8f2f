// ddrsim: command-line front end for the cluster-routing simulator.
//
//   ddrsim run <config> -o <dir> [--dump-plans] [--placement]
//   ddrsim sweep <spec> -o <dir> [--jobs N] [--traces]
//   ddrsim plot <trace.csv>... -o <out.svg> [--metric alive|packets]
//   ddrsim layout --field-side L (--ring-spacing d | --ring-count n) [-o file]
//   ddrsim analyze <config> [--tolerance t] [-o file]
//
// DDRSIM_SEED overrides the seed of run and analyze configs.

#include <cstdlib>
#include <iostream>
#include <map>

#include "CLI11.hpp"

#include "ddrsim/cli.hpp"

namespace {

std::optional<std::string> env_seed() {
    const char* v = std::getenv("DDRSIM_SEED");
    if (v == nullptr || *v == '\0') return std::nullopt;
    return std::string(v);
}

}  // namespace

int main(int argc, char** argv) {
    using namespace ddrsim::cli;

    CLI::App app{"Round-based simulator for DDR, LEACH and LEACH-C cluster routing"};
    app.require_subcommand(1);

    RunOptions run;
    auto* run_cmd = app.add_subcommand("run", "Run one simulation and write trace.csv and summary.json");
    run_cmd->add_option("config", run.config, "Experiment config (key = value)")->required();
    run_cmd->add_option("-o,--out", run.out_dir, "Output directory");
    run_cmd->add_flag("--dump-plans", run.dump_plans, "Also write plans.jsonl, one round plan per line");
    run_cmd->add_flag("--placement", run.write_placement, "Also write placement.csv");

    SweepOptions sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run every cell x protocol x seed of a sweep spec");
    sweep_cmd->add_option("spec", sweep.spec, "Sweep spec")->required();
    sweep_cmd->add_option("-o,--out", sweep.out_dir, "Output directory");
    sweep_cmd->add_option("-j,--jobs", sweep.jobs, "Concurrent simulations")->check(CLI::PositiveNumber);
    sweep_cmd->add_flag("--traces", sweep.write_traces, "Also write trace_<key>.csv per run");

    PlotOptions plot;
    auto* plot_cmd = app.add_subcommand("plot", "Render trace CSVs as an SVG line chart");
    plot_cmd->add_option("traces", plot.traces, "Trace CSV files")->required();
    plot_cmd->add_option("-o,--out", plot.output, "Output SVG");
    const std::map<std::string, PlotMetric> metrics{{"alive", PlotMetric::alive}, {"packets", PlotMetric::packets}};
    plot_cmd->add_option("-m,--metric", plot.metric, "alive or packets")
        ->transform(CLI::CheckedTransformer(metrics, CLI::ignore_case));
    plot_cmd->add_option("--title", plot.title, "Chart title");

    LayoutOptions layout;
    auto* layout_cmd = app.add_subcommand("layout", "Print the segment layout as JSON");
    layout_cmd->add_option("--field-side", layout.field_side, "Field side in meters");
    layout_cmd->add_option("--ring-spacing", layout.ring_spacing, "Distance between concentric squares");
    layout_cmd->add_option("--ring-count", layout.ring_count, "Number of concentric squares");
    layout_cmd->add_option("-o,--out", layout.output, "Output file (default stdout)");

    AnalyzeOptions analyze;
    auto* analyze_cmd = app.add_subcommand("analyze", "Compare closed-form energy predictions with round 0");
    analyze_cmd->add_option("config", analyze.config, "DDR config with three squares")->required();
    analyze_cmd->add_option("--tolerance", analyze.tolerance, "Relative deviation that gets flagged");
    analyze_cmd->add_option("-o,--out", analyze.output, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (*run_cmd) {
        run.seed_override = env_seed();
        return cmd_run(run, std::cout, std::cerr);
    }
    if (*sweep_cmd) return cmd_sweep(sweep, std::cout, std::cerr);
    if (*plot_cmd) return cmd_plot(plot, std::cout, std::cerr);
    if (*layout_cmd) return cmd_layout(layout, std::cout, std::cerr);
    if (*analyze_cmd) {
        analyze.seed_override = env_seed();
        return cmd_analyze(analyze, std::cout, std::cerr);
    }
    return 1;
}
