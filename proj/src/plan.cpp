#include "ddrsim/plan.hpp"

#include "json.hpp"

#include "ddrsim/errors.hpp"

namespace ddrsim {

std::string_view to_string(ProtocolKind k) {
    switch (k) {
        case ProtocolKind::ddr: return "ddr";
        case ProtocolKind::leach: return "leach";
        case ProtocolKind::leach_c: return "leach-c";
    }
    return "?";
}

ProtocolKind parse_protocol(std::string_view s) {
    if (s == "ddr") return ProtocolKind::ddr;
    if (s == "leach") return ProtocolKind::leach;
    if (s == "leach-c") return ProtocolKind::leach_c;
    throw ConfigError("unknown protocol '" + std::string(s) + "' (expected ddr, leach or leach-c)");
}

std::string plan_to_json_line(const RoundPlan& plan) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["round"] = plan.round;
    ordered_json chs = ordered_json::object();
    for (auto [seg, node] : plan.ch_of_segment) chs[std::to_string(seg)] = node;
    j["ch_of_segment"] = chs;
    j["cluster_heads"] = plan.cluster_heads;
    ordered_json hops = ordered_json::object();
    for (auto [ch, to] : plan.next_hop) {
        if (to == kBaseStation)
            hops[std::to_string(ch)] = "BS";
        else
            hops[std::to_string(ch)] = to;
    }
    j["next_hop"] = hops;
    ordered_json members = ordered_json::object();
    for (auto [m, ch] : plan.member_of) members[std::to_string(m)] = ch;
    j["member_of"] = members;
    j["direct_nodes"] = plan.direct_nodes;
    return j.dump();
}

}  // namespace ddrsim
