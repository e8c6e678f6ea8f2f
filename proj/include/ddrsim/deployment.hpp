#pragma once

#include <cstdint>
#include <vector>

#include "ddrsim/geometry.hpp"

namespace ddrsim {

using NodeId = int;

enum class Role { member, cluster_head, direct_to_bs };

const char* to_string(Role r);

struct NodeState {
    NodeId id = 0;
    Point pos;
    double energy = 0.0;  // residual joules
    bool alive = true;
    SegmentId segment = 0;  // 0 when placed without a layout
    Role role = Role::member;
};

/// Per-segment node counts proportional to segment area. Largest-remainder
/// rounding; equal remainders go to the smaller segment id.
std::vector<int> segment_quotas(const SegmentLayout& layout, int n_nodes);

/// Density-controlled deployment: each segment gets its area quota and places
/// that many nodes uniformly inside its rectangle. Node ids follow segment order.
/// Throws ConfigError when n_nodes is smaller than the segment count.
std::vector<NodeState> place_density_controlled(const SegmentLayout& layout, int n_nodes,
                                                std::uint64_t rng_seed, double initial_energy);

/// i.i.d. uniform positions over [0, L]^2.
std::vector<NodeState> place_uniform_random(double field_side, int n_nodes, std::uint64_t rng_seed,
                                            double initial_energy);

}  // namespace ddrsim
