#include "ddrsim/ddr.hpp"

#include <algorithm>
#include <limits>

namespace ddrsim {

std::vector<NodeId> rank_by_centroid_distance(const SegmentLayout& layout,
                                              const std::vector<NodeState>& nodes, SegmentId segment) {
    const Point c = layout.segment(segment).centroid;
    std::vector<std::pair<double, NodeId>> ranked;
    for (const auto& n : nodes)
        if (n.alive && n.segment == segment) ranked.emplace_back(distance_squared(n.pos, c), n.id);
    std::sort(ranked.begin(), ranked.end());
    std::vector<NodeId> ids;
    ids.reserve(ranked.size());
    for (const auto& r : ranked) ids.push_back(r.second);
    return ids;
}

std::map<SegmentId, NodeId> elect_chs(const SegmentLayout& layout, const std::vector<NodeState>& nodes,
                                      int round) {
    std::map<SegmentId, NodeId> chs;
    for (const auto& seg : layout.segments()) {
        if (seg.ring < 2) continue;
        const auto ranked = rank_by_centroid_distance(layout, nodes, seg.id);
        if (ranked.empty()) continue;
        const auto m = static_cast<long long>(ranked.size());
        chs[seg.id] = ranked[static_cast<std::size_t>(static_cast<long long>(round) % m)];
    }
    return chs;
}

Membership assign_members(const SegmentLayout& layout, const std::vector<NodeState>& nodes,
                          const std::map<SegmentId, NodeId>& ch_of_segment) {
    Membership out;
    std::vector<bool> orphaned(layout.segments().size() + 1, false);
    for (const auto& n : nodes) {
        if (!n.alive) continue;
        const Segment& seg = layout.segment(n.segment);
        if (seg.ring == 1) {
            out.direct_nodes.push_back(n.id);
            continue;
        }
        auto it = ch_of_segment.find(seg.id);
        if (it == ch_of_segment.end()) {
            orphaned[static_cast<std::size_t>(seg.id)] = true;
            continue;
        }
        if (it->second != n.id) out.member_of[n.id] = it->second;
    }
    for (std::size_t s = 1; s < orphaned.size(); ++s)
        if (orphaned[s]) out.orphan_segments.push_back(static_cast<SegmentId>(s));
    return out;
}

std::map<NodeId, NodeId> route_next_hop(const SegmentLayout& layout, const std::vector<NodeState>& nodes,
                                        const std::map<SegmentId, NodeId>& ch_of_segment) {
    std::map<NodeId, NodeId> hops;
    for (auto [seg_id, ch] : ch_of_segment) {
        const Segment& seg = layout.segment(seg_id);
        if (seg.ring <= 2) {
            hops[ch] = kBaseStation;
            continue;
        }
        const auto same_side = ch_of_segment.find(layout.segment_at(seg.ring - 1, seg.side));
        if (same_side != ch_of_segment.end()) {
            hops[ch] = same_side->second;
            continue;
        }
        NodeId best = kBaseStation;
        double best_d2 = std::numeric_limits<double>::infinity();
        const Point from = nodes[static_cast<std::size_t>(ch)].pos;
        for (auto [other_seg, other_ch] : ch_of_segment) {
            if (layout.segment(other_seg).ring != seg.ring - 1) continue;
            const double d2 = distance_squared(from, nodes[static_cast<std::size_t>(other_ch)].pos);
            if (d2 < best_d2 || (d2 == best_d2 && other_ch < best)) {
                best_d2 = d2;
                best = other_ch;
            }
        }
        hops[ch] = best;
    }
    return hops;
}

RoundPlan DdrProtocol::plan_round(const std::vector<NodeState>& nodes, int round) {
    RoundPlan plan;
    plan.round = round;
    plan.ch_of_segment = elect_chs(layout_, nodes, round);
    for (auto [seg, ch] : plan.ch_of_segment) plan.cluster_heads.push_back(ch);
    std::sort(plan.cluster_heads.begin(), plan.cluster_heads.end());
    auto membership = assign_members(layout_, nodes, plan.ch_of_segment);
    plan.member_of = std::move(membership.member_of);
    plan.direct_nodes = std::move(membership.direct_nodes);
    plan.next_hop = route_next_hop(layout_, nodes, plan.ch_of_segment);
    return plan;
}

}  // namespace ddrsim
