#pragma once

#include <map>
#include <vector>

#include "ddrsim/deployment.hpp"
#include "ddrsim/geometry.hpp"
#include "ddrsim/plan.hpp"

namespace ddrsim {

/// Alive nodes of one segment ordered by distance to the segment centroid,
/// ties by node id.
std::vector<NodeId> rank_by_centroid_distance(const SegmentLayout& layout,
                                              const std::vector<NodeState>& nodes, SegmentId segment);

/// Rank-rotation election. For every segment of ring >= 2 with m alive nodes the
/// head is the node at rank (round mod m). The inner square gets no head.
std::map<SegmentId, NodeId> elect_chs(const SegmentLayout& layout, const std::vector<NodeState>& nodes,
                                      int round);

struct Membership {
    std::map<NodeId, NodeId> member_of;
    std::vector<NodeId> direct_nodes;
    std::vector<SegmentId> orphan_segments;  // alive nodes but no head; never expected
};

/// Static clustering: every alive non-head node joins its own segment's head;
/// alive inner-square nodes report directly to the base station.
Membership assign_members(const SegmentLayout& layout, const std::vector<NodeState>& nodes,
                          const std::map<SegmentId, NodeId>& ch_of_segment);

/// Inward relay. Ring-2 heads send to the base station; a ring-k head sends to
/// the ring-(k-1) head on the same side, else to the nearest ring-(k-1) head,
/// else straight to the base station.
std::map<NodeId, NodeId> route_next_hop(const SegmentLayout& layout, const std::vector<NodeState>& nodes,
                                        const std::map<SegmentId, NodeId>& ch_of_segment);

class DdrProtocol final : public Protocol {
public:
    explicit DdrProtocol(SegmentLayout layout) : layout_(std::move(layout)) {}

    ProtocolKind kind() const override { return ProtocolKind::ddr; }
    RoundPlan plan_round(const std::vector<NodeState>& nodes, int round) override;

    const SegmentLayout& layout() const { return layout_; }

private:
    SegmentLayout layout_;
};

}  // namespace ddrsim
