#include "ddrsim/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "ddrsim/config.hpp"
#include "ddrsim/errors.hpp"

namespace ddrsim {

using nlohmann::ordered_json;

std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

std::string trace_csv(const std::vector<RoundRecord>& trace) {
    std::string out(kTraceHeader);
    out += '\n';
    for (const auto& r : trace) {
        out += std::to_string(r.round) + ',' + std::to_string(r.alive) + ',' + std::to_string(r.packets_to_bs) +
               ',' + std::to_string(r.ch_count) + ',' + format_fixed(r.total_residual_j, 9) + '\n';
    }
    return out;
}

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        const auto pos = line.find(sep);
        out.push_back(line.substr(0, pos));
        if (pos == std::string_view::npos) break;
        line = line.substr(pos + 1);
    }
    return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
    std::vector<std::string_view> out;
    for (auto line : split(text, '\n')) {
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

}  // namespace

std::vector<RoundRecord> parse_trace_csv(std::string_view text) {
    const auto lines = lines_of(text);
    if (lines.empty() || lines.front() != kTraceHeader)
        throw ParseError("trace CSV must start with header '" + std::string(kTraceHeader) + "'");
    std::vector<RoundRecord> trace;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto cols = split(lines[i], ',');
        if (cols.size() != 5) throw ParseError("trace CSV line " + std::to_string(i + 1) + ": expected 5 columns");
        try {
            RoundRecord r;
            r.round = static_cast<int>(parse_integer(cols[0], "round"));
            r.alive = static_cast<int>(parse_integer(cols[1], "alive"));
            r.packets_to_bs = parse_integer(cols[2], "packets_to_bs");
            r.ch_count = static_cast<int>(parse_integer(cols[3], "ch_count"));
            r.total_residual_j = parse_double(cols[4], "total_residual_j");
            trace.push_back(r);
        } catch (const ConfigError& e) {
            throw ParseError("trace CSV line " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return trace;
}

std::string summary_json(const SimSummary& s, const SimConfig& config) {
    ordered_json j;
    j["protocol"] = std::string(to_string(config.protocol));
    j["seed"] = config.seed;
    j["field_side_m"] = config.field_side;
    j["n_nodes"] = config.n_nodes;
    j["fnd_round"] = s.fnd ? ordered_json(*s.fnd) : ordered_json(std::string(kNotReached));
    j["lnd_round"] = s.lnd ? ordered_json(*s.lnd) : ordered_json(std::string(kNotReached));
    j["total_packets"] = s.total_packets;
    j["rounds_simulated"] = s.rounds_simulated;
    return j.dump(2) + "\n";
}

SummaryDocument parse_summary_json(std::string_view text) {
    try {
        const auto j = ordered_json::parse(text);
        SummaryDocument d;
        d.protocol = j.at("protocol").get<std::string>();
        d.seed = j.at("seed").get<std::uint64_t>();
        d.field_side_m = j.at("field_side_m").get<double>();
        d.n_nodes = j.at("n_nodes").get<int>();
        auto round_or_unset = [&](const char* key) -> std::optional<int> {
            const auto& v = j.at(key);
            if (v.is_string()) {
                if (v.get<std::string>() != kNotReached) throw ParseError(std::string(key) + ": unexpected string");
                return std::nullopt;
            }
            return v.get<int>();
        };
        d.summary.fnd = round_or_unset("fnd_round");
        d.summary.lnd = round_or_unset("lnd_round");
        d.summary.total_packets = j.at("total_packets").get<long long>();
        d.summary.rounds_simulated = j.at("rounds_simulated").get<int>();
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("summary JSON: ") + e.what());
    }
}

std::string layout_json(const SegmentLayout& layout) {
    auto point = [](const Point& p) { return ordered_json{{"x", p.x}, {"y", p.y}}; };
    ordered_json j;
    j["field_side"] = layout.field_side();
    j["ring_spacing"] = layout.ring_spacing();
    j["ring_count"] = layout.ring_count();
    j["center"] = point(layout.center());
    ordered_json segs = ordered_json::array();
    for (const auto& s : layout.segments()) {
        ordered_json e;
        e["id"] = s.id;
        e["ring"] = s.ring;
        e["side"] = to_string(s.side);
        e["rect"] = ordered_json{{"lo", point(s.rect.lo)}, {"hi", point(s.rect.hi)}};
        e["area"] = s.area;
        e["centroid"] = point(s.centroid);
        segs.push_back(std::move(e));
    }
    j["segments"] = std::move(segs);
    return j.dump(2) + "\n";
}

std::string placement_csv(const std::vector<NodeState>& nodes) {
    std::string out = "id,x,y,segment\n";
    for (const auto& n : nodes)
        out += std::to_string(n.id) + ',' + format_fixed(n.pos.x, 6) + ',' + format_fixed(n.pos.y, 6) + ',' +
               std::to_string(n.segment) + '\n';
    return out;
}

}  // namespace ddrsim
