#pragma once

#include <cstdint>
#include <vector>

#include "ddrsim/deployment.hpp"
#include "ddrsim/plan.hpp"
#include "ddrsim/rng.hpp"

namespace ddrsim {

struct LeachParams {
    double p = 0.05;  // desired cluster-head fraction per round

    /// Rounds per epoch, round(1/p).
    int epoch() const;
    void validate() const;
};

/// LEACH election threshold T = p / (1 - p * (round mod epoch)) for nodes that
/// have not been head in the current epoch, 0 otherwise. The last round of an
/// epoch returns exactly 1 so every eligible node is elected by epoch end.
double leach_threshold(double p, int round, bool eligible);

/// Members join the nearest head (ties to the smaller head id). With no heads,
/// every alive node goes direct. Heads always send to the base station.
void attach_to_nearest_head(const std::vector<NodeState>& nodes, RoundPlan& plan);

/// One LEACH round. `last_head_epoch[id]` records the epoch in which each node
/// last served as head and is updated for the nodes elected here.
RoundPlan leach_round_plan(const std::vector<NodeState>& nodes, const LeachParams& params, int round,
                           std::vector<int>& last_head_epoch, Rng& rng);

/// Deterministic k-medoids over alive node positions, medoids restricted to
/// `candidates`. Farthest-point initialization from the highest-energy
/// candidate, then one refinement pass that moves each medoid to the candidate
/// in its cluster with the smallest total distance to the cluster.
std::vector<NodeId> select_medoids(const std::vector<NodeState>& nodes, const std::vector<NodeId>& candidates,
                                   int k);

/// Nodes whose residual energy is at least the mean over alive nodes.
std::vector<NodeId> leachc_candidates(const std::vector<NodeState>& nodes);

/// One centralized LEACH-C round: k = max(1, round(p * alive)) heads chosen by
/// select_medoids among the above-mean-energy nodes.
RoundPlan leachc_round_plan(const std::vector<NodeState>& nodes, const LeachParams& params, int round);

class LeachProtocol final : public Protocol {
public:
    LeachProtocol(LeachParams params, std::uint64_t seed, std::size_t n_nodes)
        : params_(params), rng_(seed, Stream::protocol), last_head_epoch_(n_nodes, -1) {}

    ProtocolKind kind() const override { return ProtocolKind::leach; }
    RoundPlan plan_round(const std::vector<NodeState>& nodes, int round) override {
        return leach_round_plan(nodes, params_, round, last_head_epoch_, rng_);
    }

private:
    LeachParams params_;
    Rng rng_;
    std::vector<int> last_head_epoch_;
};

class LeachCProtocol final : public Protocol {
public:
    explicit LeachCProtocol(LeachParams params) : params_(params) {}

    ProtocolKind kind() const override { return ProtocolKind::leach_c; }
    RoundPlan plan_round(const std::vector<NodeState>& nodes, int round) override {
        return leachc_round_plan(nodes, params_, round);
    }

private:
    LeachParams params_;
};

}  // namespace ddrsim
