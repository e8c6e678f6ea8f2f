#include "ddrsim/cli.hpp"

#include <fstream>
#include <ostream>

#include "ddrsim/analysis.hpp"
#include "ddrsim/config.hpp"
#include "ddrsim/errors.hpp"
#include "ddrsim/report.hpp"
#include "ddrsim/svg.hpp"
#include "ddrsim/sweep.hpp"

namespace ddrsim::cli {

namespace fs = std::filesystem;

namespace {

class IoFailure : public Error {
public:
    using Error::Error;
};

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoFailure("cannot open " + path.string() + " for writing");
    out << content;
    if (!out.flush()) throw IoFailure("write to " + path.string() + " failed");
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw IoFailure("cannot create output directory " + dir.string());
}

std::string read_input(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot read " + path.string());
    return std::string(std::istreambuf_iterator<char>(in), {});
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const IoFailure& e) {
        err << "error: " << e.what() << "\n";
        return kIoFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kConfigFailure;
    }
}

SimConfig load_with_override(const fs::path& path, const std::optional<std::string>& seed) {
    SimConfig c = parse_config(read_input(path));
    if (seed) apply_seed_override(c, seed->c_str());
    return c;
}

}  // namespace

int cmd_run(const RunOptions& o, std::ostream& log, std::ostream& err) {
    return guarded(err, [&] {
        const SimConfig config = load_with_override(o.config, o.seed_override);
        ensure_dir(o.out_dir);

        std::string plans;
        RoundObserver observer;
        if (o.dump_plans)
            observer = [&](const RoundObservation& obs) { plans += plan_to_json_line(obs.plan) + "\n"; };
        const SimResult result = run_sim(config, observer);

        write_file(o.out_dir / "trace.csv", trace_csv(result.trace));
        write_file(o.out_dir / "summary.json", summary_json(result.summary, config));
        if (o.dump_plans) write_file(o.out_dir / "plans.jsonl", plans);
        if (o.write_placement) write_file(o.out_dir / "placement.csv", placement_csv(result.initial_nodes));

        const auto& s = result.summary;
        log << to_string(config.protocol) << " seed " << config.seed << ": fnd "
            << (s.fnd ? std::to_string(*s.fnd) : std::string(kNotReached)) << ", lnd "
            << (s.lnd ? std::to_string(*s.lnd) : std::string(kNotReached)) << ", packets " << s.total_packets
            << ", rounds " << s.rounds_simulated << "\n";
        return kOk;
    });
}

int cmd_sweep(const SweepOptions& o, std::ostream& log, std::ostream& err) {
    return guarded(err, [&] {
        const SweepSpec spec = parse_sweep(read_input(o.spec));
        ensure_dir(o.out_dir);
        const auto runs = run_sweep(spec, o.jobs);

        int failures = 0;
        for (const auto& r : runs) {
            if (!r.result) {
                ++failures;
                err << "error: " << r.key() << ": " << r.error << "\n";
                continue;
            }
            write_file(o.out_dir / ("summary_" + r.key() + ".json"), summary_json(r.result->summary, r.config));
            if (o.write_traces) write_file(o.out_dir / ("trace_" + r.key() + ".csv"), trace_csv(r.result->trace));
        }
        write_file(o.out_dir / "sweep.csv", sweep_csv(runs));
        log << runs.size() - static_cast<std::size_t>(failures) << " of " << runs.size() << " runs completed\n";
        return failures == 0 ? kOk : kConfigFailure;
    });
}

namespace {

std::string series_label(const fs::path& trace) {
    const fs::path dir = trace.parent_path();
    std::string stem = trace.stem().string();
    std::vector<fs::path> candidates{dir / "summary.json"};
    if (stem.rfind("trace_", 0) == 0) candidates.insert(candidates.begin(), dir / ("summary_" + stem.substr(6) + ".json"));
    for (const auto& c : candidates) {
        std::error_code ec;
        if (!fs::exists(c, ec)) continue;
        try {
            const auto doc = parse_summary_json(read_input(c));
            return doc.protocol + " (seed " + std::to_string(doc.seed) + ")";
        } catch (const Error&) {
        }
    }
    return stem;
}

}  // namespace

int cmd_plot(const PlotOptions& o, std::ostream& log, std::ostream& err) {
    return guarded(err, [&] {
        if (o.traces.empty()) throw ConfigError("plot needs at least one trace CSV");
        std::vector<Series> series;
        for (const auto& path : o.traces) {
            const auto trace = parse_trace_csv(read_input(path));
            Series s;
            s.label = series_label(path);
            for (const auto& r : trace)
                s.points.emplace_back(r.round, o.metric == PlotMetric::alive ? static_cast<double>(r.alive)
                                                                             : static_cast<double>(r.packets_to_bs));
            series.push_back(std::move(s));
        }
        ChartOptions chart;
        chart.x_label = "Rounds";
        if (o.metric == PlotMetric::alive) {
            chart.title = o.title.empty() ? "Alive nodes" : o.title;
            chart.y_label = "Alive nodes";
        } else {
            chart.title = o.title.empty() ? "Packets sent to BS" : o.title;
            chart.y_label = "Packets to BS";
        }
        write_file(o.output, render_line_chart(series, chart));
        log << "wrote " << o.output.string() << " (" << series.size() << " series)\n";
        return kOk;
    });
}

int cmd_layout(const LayoutOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (o.ring_spacing.has_value() == o.ring_count.has_value())
            throw ConfigError("give exactly one of --ring-spacing or --ring-count");
        const SegmentLayout layout = o.ring_count ? SegmentLayout::from_ring_count(o.field_side, *o.ring_count)
                                                  : SegmentLayout(o.field_side, *o.ring_spacing);
        const std::string doc = layout_json(layout);
        if (o.output)
            write_file(*o.output, doc);
        else
            out << doc;
        return kOk;
    });
}

int cmd_analyze(const AnalyzeOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const SimConfig config = load_with_override(o.config, o.seed_override);
        const auto obs = observe_first_round(config);
        const auto report = crosscheck(obs, predict(config, obs), o.tolerance);
        const std::string doc = crosscheck_json(report);
        if (o.output)
            write_file(*o.output, doc);
        else
            out << doc;
        return kOk;
    });
}

}  // namespace ddrsim::cli
