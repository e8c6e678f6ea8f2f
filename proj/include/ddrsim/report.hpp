#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ddrsim/engine.hpp"

namespace ddrsim {

inline constexpr std::string_view kTraceHeader = "round,alive,packets_to_bs,ch_count,total_residual_j";
inline constexpr std::string_view kSweepHeader = "protocol,field_side,n_nodes,seed,fnd_round,lnd_round,total_packets";
inline constexpr std::string_view kNotReached = "not-reached";

/// Trace CSV with the exact header above; residual energy printed with %.9f.
std::string trace_csv(const std::vector<RoundRecord>& trace);
/// Throws ParseError on a wrong header or malformed row.
std::vector<RoundRecord> parse_trace_csv(std::string_view text);

/// Summary JSON with keys protocol, seed, field_side_m, n_nodes, fnd_round,
/// lnd_round, total_packets, rounds_simulated. Unreached FND/LND are "not-reached".
std::string summary_json(const SimSummary& summary, const SimConfig& config);

struct SummaryDocument {
    std::string protocol;
    std::uint64_t seed = 0;
    double field_side_m = 0.0;
    int n_nodes = 0;
    SimSummary summary;
};

SummaryDocument parse_summary_json(std::string_view text);

std::string layout_json(const SegmentLayout& layout);

/// id,x,y,segment
std::string placement_csv(const std::vector<NodeState>& nodes);

/// Formats with snprintf so output bytes do not depend on stream state or locale.
std::string format_fixed(double value, int decimals);

}  // namespace ddrsim
