#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ddrsim/deployment.hpp"
#include "ddrsim/geometry.hpp"

namespace ddrsim {

/// Next-hop target meaning "the base station".
inline constexpr NodeId kBaseStation = -1;

/// Everything a protocol decides for one round. The engine only executes it.
struct RoundPlan {
    int round = 0;                              // zero-based round index
    std::map<SegmentId, NodeId> ch_of_segment;  // segment-based protocols only
    std::vector<NodeId> cluster_heads;          // ascending id
    std::map<NodeId, NodeId> next_hop;          // cluster head -> cluster head or kBaseStation
    std::map<NodeId, NodeId> member_of;         // member -> its cluster head
    std::vector<NodeId> direct_nodes;           // send their own packet straight to the base station
};

enum class ProtocolKind { ddr, leach, leach_c };

std::string_view to_string(ProtocolKind k);
/// Accepts "ddr", "leach", "leach-c". Throws ConfigError otherwise.
ProtocolKind parse_protocol(std::string_view s);

class Protocol {
public:
    virtual ~Protocol() = default;
    virtual ProtocolKind kind() const = 0;
    /// Plans round `round` from a snapshot of node state. Only alive nodes may appear.
    virtual RoundPlan plan_round(const std::vector<NodeState>& nodes, int round) = 0;
};

/// One JSON object on a single line, used for plans.jsonl dumps.
std::string plan_to_json_line(const RoundPlan& plan);

}  // namespace ddrsim
