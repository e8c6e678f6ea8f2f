#include "ddrsim/deployment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ddrsim/errors.hpp"
#include "ddrsim/rng.hpp"

namespace ddrsim {

const char* to_string(Role r) {
    switch (r) {
        case Role::member: return "member";
        case Role::cluster_head: return "cluster-head";
        case Role::direct_to_bs: return "direct-to-bs";
    }
    return "?";
}

std::vector<int> segment_quotas(const SegmentLayout& layout, int n_nodes) {
    const auto& segs = layout.segments();
    // Segment areas are whole multiples of d^2, so apportion in those units exactly.
    const double cell = layout.ring_spacing() * layout.ring_spacing();
    std::vector<long long> units(segs.size());
    long long total = 0;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        units[i] = std::llround(segs[i].area / cell);
        total += units[i];
    }

    std::vector<int> quota(segs.size());
    std::vector<long long> remainder(segs.size());
    int assigned = 0;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        quota[i] = static_cast<int>(n_nodes * units[i] / total);
        remainder[i] = n_nodes * units[i] % total;
        assigned += quota[i];
    }

    std::vector<std::size_t> order(segs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
    for (std::size_t k = 0; assigned < n_nodes; ++k, ++assigned) ++quota[order[k % order.size()]];
    return quota;
}

std::vector<NodeState> place_density_controlled(const SegmentLayout& layout, int n_nodes,
                                                std::uint64_t rng_seed, double initial_energy) {
    const auto& segs = layout.segments();
    if (n_nodes < static_cast<int>(segs.size()))
        throw ConfigError("density-controlled deployment needs at least one node per segment: " +
                          std::to_string(n_nodes) + " nodes for " + std::to_string(segs.size()) +
                          " segments");

    const auto quota = segment_quotas(layout, n_nodes);
    Rng rng(rng_seed, Stream::placement);
    std::vector<NodeState> nodes;
    nodes.reserve(static_cast<std::size_t>(n_nodes));
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const Rect& r = segs[i].rect;
        for (int q = 0; q < quota[i]; ++q) {
            Point p;
            // A draw on an edge shared with a smaller-id segment would locate there; redraw.
            do {
                p = {rng.uniform(r.lo.x, r.hi.x), rng.uniform(r.lo.y, r.hi.y)};
            } while (layout.segment_of(p) != segs[i].id);
            NodeState n;
            n.id = static_cast<NodeId>(nodes.size());
            n.pos = p;
            n.energy = initial_energy;
            n.segment = segs[i].id;
            nodes.push_back(n);
        }
    }
    return nodes;
}

std::vector<NodeState> place_uniform_random(double field_side, int n_nodes, std::uint64_t rng_seed,
                                            double initial_energy) {
    if (n_nodes < 1) throw ConfigError("at least one node is required");
    Rng rng(rng_seed, Stream::placement);
    std::vector<NodeState> nodes(static_cast<std::size_t>(n_nodes));
    for (int i = 0; i < n_nodes; ++i) {
        auto& n = nodes[static_cast<std::size_t>(i)];
        n.id = i;
        n.pos.x = rng.uniform(0.0, field_side);
        n.pos.y = rng.uniform(0.0, field_side);
        n.energy = initial_energy;
    }
    return nodes;
}

}  // namespace ddrsim
