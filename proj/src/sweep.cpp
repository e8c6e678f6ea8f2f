#include "ddrsim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "ddrsim/config.hpp"
#include "ddrsim/errors.hpp"
#include "ddrsim/report.hpp"

namespace ddrsim {

namespace {

std::vector<std::string> words(std::string_view v) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : v) {
        if (c == ' ' || c == '\t' || c == ',') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::string fmt_side(double v) {
    std::string s = format_fixed(v, 6);
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
}

}  // namespace

void SweepSpec::validate() const {
    if (cells.empty()) throw ConfigError("sweep has no cells");
    if (protocols.empty()) throw ConfigError("sweep has no protocols");
    if (seeds.empty()) throw ConfigError("sweep has no seeds");
    for (const auto& c : cells) {
        if (c.ring_count < 2) throw ConfigError("sweep cell ring_count must be at least 2");
        for (auto p : protocols) cell_config(*this, c, p, seeds.front()).validate();
    }
}

SweepSpec parse_sweep(std::string_view text) {
    SweepSpec spec;
    ConfigDraft draft;
    for (const auto& e : parse_key_values(text)) {
        const std::string where = "line " + std::to_string(e.line) + ": ";
        if (e.key == "cell") {
            const auto w = words(e.value);
            if (w.size() != 3) throw ConfigError(where + "cell needs 'field_side n_nodes ring_count'");
            spec.cells.push_back({parse_double(w[0], "cell field_side"),
                                  static_cast<int>(parse_integer(w[1], "cell n_nodes")),
                                  static_cast<int>(parse_integer(w[2], "cell ring_count"))});
        } else if (e.key == "protocols") {
            spec.protocols.clear();
            for (const auto& w : words(e.value)) spec.protocols.push_back(parse_protocol(w));
        } else if (e.key == "seeds") {
            spec.seeds.clear();
            for (const auto& w : words(e.value)) {
                if (const auto dots = w.find(".."); dots != std::string::npos) {
                    const auto lo = parse_integer(std::string_view(w).substr(0, dots), "seed range");
                    const auto hi = parse_integer(std::string_view(w).substr(dots + 2), "seed range");
                    if (hi < lo) throw ConfigError(where + "empty seed range " + w);
                    for (auto s = lo; s <= hi; ++s) spec.seeds.push_back(static_cast<std::uint64_t>(s));
                } else {
                    spec.seeds.push_back(static_cast<std::uint64_t>(parse_integer(w, "seed")));
                }
            }
        } else if (e.key == "protocol") {
            throw ConfigError(where + "use 'protocols' in a sweep");
        } else if (!apply_config_entry(draft, e)) {
            throw ConfigError(where + "unknown key '" + e.key + "'");
        }
    }
    spec.base = draft.finish();
    spec.validate();
    return spec;
}

std::vector<SweepCell> scalability_cells() {
    return {{100.0, 100, 3}, {134.0, 134, 4}, {150.0, 150, 5}, {200.0, 200, 6}};
}

SimConfig cell_config(const SweepSpec& spec, const SweepCell& cell, ProtocolKind protocol, std::uint64_t seed) {
    SimConfig c = spec.base;
    c.field_side = cell.field_side;
    c.n_nodes = cell.n_nodes;
    c.ring_spacing = cell.field_side / (2.0 * cell.ring_count);
    c.protocol = protocol;
    c.seed = seed;
    return c;
}

std::string SweepRun::key() const {
    return "L" + fmt_side(cell.field_side) + "_N" + std::to_string(cell.n_nodes) + "_R" +
           std::to_string(cell.ring_count) + "_" + std::string(to_string(protocol)) + "_s" + std::to_string(seed);
}

std::vector<SweepRun> run_sweep(const SweepSpec& spec, int jobs) {
    std::vector<SweepRun> runs;
    runs.reserve(spec.run_count());
    for (const auto& cell : spec.cells)
        for (auto p : spec.protocols)
            for (auto s : spec.seeds) {
                SweepRun r;
                r.cell = cell;
                r.protocol = p;
                r.seed = s;
                r.config = cell_config(spec, cell, p, s);
                runs.push_back(std::move(r));
            }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < runs.size(); i = next++) {
            try {
                runs[i].result = run_sim(runs[i].config);
            } catch (const std::exception& e) {
                runs[i].error = e.what();
            }
        }
    };
    const int n = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(1, runs.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return runs;
}

std::string sweep_csv(const std::vector<SweepRun>& runs) {
    std::string out(kSweepHeader);
    out += '\n';
    for (const auto& r : runs) {
        out += std::string(to_string(r.protocol)) + ',' + fmt_side(r.cell.field_side) + ',' +
               std::to_string(r.cell.n_nodes) + ',' + std::to_string(r.seed) + ',';
        if (!r.result) {
            out += "error,error,error\n";
            continue;
        }
        const auto& s = r.result->summary;
        out += (s.fnd ? std::to_string(*s.fnd) : std::string()) + ',' +
               (s.lnd ? std::to_string(*s.lnd) : std::string()) + ',' + std::to_string(s.total_packets) + '\n';
    }
    return out;
}

}  // namespace ddrsim
