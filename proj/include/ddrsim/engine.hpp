#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "ddrsim/baselines.hpp"
#include "ddrsim/deployment.hpp"
#include "ddrsim/geometry.hpp"
#include "ddrsim/plan.hpp"
#include "ddrsim/radio.hpp"

namespace ddrsim {

struct SimConfig {
    double field_side = 100.0;
    int n_nodes = 100;
    double initial_energy = 0.5;
    std::optional<double> ring_spacing;  // required for DDR and for shared placement
    ProtocolKind protocol = ProtocolKind::ddr;
    RadioParams radio;
    LeachParams leach;
    int max_rounds = 5000;
    std::uint64_t seed = 1;
    bool shared_placement = true;

    /// Throws ConfigError on any violated precondition, including DDR geometry.
    void validate() const;
    /// The segmentation, when a ring spacing is configured.
    std::optional<SegmentLayout> layout() const;
    Point base_station() const { return {field_side / 2.0, field_side / 2.0}; }
};

/// 144 nodes on 120 m x 120 m with 20 m rings: the 0.01 nodes/m^2 density of a
/// 100-node, 100 m x 100 m field on whole-ring geometry.
SimConfig canonical_config(ProtocolKind protocol, std::uint64_t seed);

/// Density-controlled when the protocol is DDR or placement is shared and a
/// layout exists; uniform random otherwise. Same config and seed give the same list.
std::vector<NodeState> place_nodes(const SimConfig& config);

std::unique_ptr<Protocol> make_protocol(const SimConfig& config);

enum class Charge : std::size_t {
    member_tx,
    head_rx,
    aggregate,
    head_tx,
    relay_rx,
    relay_tx,
    direct_tx,
};
inline constexpr std::size_t kChargeKinds = 7;

/// Joules actually debited from each node in one round, split by event kind.
struct RoundEnergy {
    std::vector<std::array<double, kChargeKinds>> by_node;

    double node_total(NodeId id) const;
    double total() const;
    double total(Charge kind) const;
};

struct RoundResult {
    int alive = 0;
    long long packets_delivered = 0;  // this round only
    int ch_count = 0;
    double total_residual = 0.0;
    RoundEnergy energy;
};

/// Executes one plan against `nodes` in place: member uplinks, aggregation,
/// head transmissions in decreasing hop depth, then direct uplinks. A node that
/// runs dry finishes its current event, then dies with residual clamped at 0.
/// Throws PlanStateMismatch if the plan names dead nodes or has a relay cycle.
RoundResult run_round(std::vector<NodeState>& nodes, const RoundPlan& plan, const RadioParams& radio,
                      const Point& base_station);

struct RoundRecord {
    int round = 0;  // 1-based count of executed rounds
    int alive = 0;
    long long packets_to_bs = 0;  // cumulative
    int ch_count = 0;
    double total_residual_j = 0.0;

    friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

struct SimSummary {
    std::optional<int> fnd;  // unset: no node died before the cap
    std::optional<int> lnd;
    long long total_packets = 0;
    int rounds_simulated = 0;

    friend bool operator==(const SimSummary&, const SimSummary&) = default;
};

/// FND is the first round with alive < n_nodes, LND the first with alive == 0.
/// Throws EmptyTrace.
SimSummary compute_summary(const std::vector<RoundRecord>& trace, int n_nodes);

struct RoundObservation {
    const RoundPlan& plan;
    const std::vector<NodeState>& before;
    const std::vector<NodeState>& after;
    const RoundResult& result;
    const RoundRecord& record;
};

using RoundObserver = std::function<void(const RoundObservation&)>;

struct SimResult {
    SimSummary summary;
    std::vector<RoundRecord> trace;
    std::vector<NodeState> initial_nodes;
};

/// Runs until every node is dead or max_rounds is reached.
SimResult run_sim(const SimConfig& config, const RoundObserver& observer = {});

}  // namespace ddrsim
