#include "ddrsim/engine.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ddrsim/ddr.hpp"
#include "ddrsim/errors.hpp"

namespace ddrsim {

void SimConfig::validate() const {
    if (!(field_side > 0.0)) throw ConfigError("field_side must be positive");
    if (n_nodes < 1) throw ConfigError("n_nodes must be at least 1");
    if (!(initial_energy > 0.0)) throw ConfigError("initial_energy must be positive");
    if (max_rounds < 1) throw ConfigError("max_rounds must be at least 1");
    radio.validate();
    leach.validate();
    if (protocol == ProtocolKind::ddr) {
        if (!ring_spacing) throw ConfigError("DDR needs ring_spacing (or ring_count)");
        const SegmentLayout l(field_side, *ring_spacing);
        if (n_nodes < static_cast<int>(l.segments().size()))
            throw ConfigError("DDR needs at least one node per segment (" +
                              std::to_string(l.segments().size()) + " segments)");
    } else if (shared_placement && ring_spacing) {
        const SegmentLayout l(field_side, *ring_spacing);
        if (n_nodes < static_cast<int>(l.segments().size()))
            throw ConfigError("shared placement needs at least one node per segment (" +
                              std::to_string(l.segments().size()) + " segments)");
    }
}

std::optional<SegmentLayout> SimConfig::layout() const {
    if (!ring_spacing) return std::nullopt;
    return SegmentLayout(field_side, *ring_spacing);
}

SimConfig canonical_config(ProtocolKind protocol, std::uint64_t seed) {
    SimConfig c;
    c.field_side = 120.0;
    c.n_nodes = 144;
    c.ring_spacing = 20.0;
    c.initial_energy = 0.5;
    c.protocol = protocol;
    c.seed = seed;
    c.max_rounds = 5000;
    c.shared_placement = true;
    return c;
}

std::vector<NodeState> place_nodes(const SimConfig& config) {
    const bool density_controlled =
        config.protocol == ProtocolKind::ddr || (config.shared_placement && config.ring_spacing);
    if (density_controlled)
        return place_density_controlled(*config.layout(), config.n_nodes, config.seed, config.initial_energy);
    return place_uniform_random(config.field_side, config.n_nodes, config.seed, config.initial_energy);
}

std::unique_ptr<Protocol> make_protocol(const SimConfig& config) {
    switch (config.protocol) {
        case ProtocolKind::ddr: return std::make_unique<DdrProtocol>(*config.layout());
        case ProtocolKind::leach:
            return std::make_unique<LeachProtocol>(config.leach, config.seed,
                                                   static_cast<std::size_t>(config.n_nodes));
        case ProtocolKind::leach_c: return std::make_unique<LeachCProtocol>(config.leach);
    }
    throw ConfigError("unknown protocol");
}

double RoundEnergy::node_total(NodeId id) const {
    const auto& row = by_node[static_cast<std::size_t>(id)];
    return std::accumulate(row.begin(), row.end(), 0.0);
}

double RoundEnergy::total() const {
    double sum = 0.0;
    for (const auto& row : by_node)
        for (double v : row) sum += v;
    return sum;
}

double RoundEnergy::total(Charge kind) const {
    double sum = 0.0;
    for (const auto& row : by_node) sum += row[static_cast<std::size_t>(kind)];
    return sum;
}

namespace {

void check_plan(const std::vector<NodeState>& nodes, const RoundPlan& plan, std::vector<int>& depth) {
    auto require_alive = [&](NodeId id, const char* what) {
        if (id < 0 || id >= static_cast<NodeId>(nodes.size()) || !nodes[static_cast<std::size_t>(id)].alive)
            throw PlanStateMismatch(std::string("round ") + std::to_string(plan.round) + ": " + what + " " +
                                    std::to_string(id) + " is not an alive node");
    };
    std::vector<char> is_head(nodes.size(), 0);
    for (NodeId h : plan.cluster_heads) {
        require_alive(h, "cluster head");
        is_head[static_cast<std::size_t>(h)] = 1;
        if (!plan.next_hop.count(h))
            throw PlanStateMismatch("cluster head " + std::to_string(h) + " has no next hop");
    }
    for (auto [m, h] : plan.member_of) {
        require_alive(m, "member");
        require_alive(h, "member's head");
        if (!is_head[static_cast<std::size_t>(h)])
            throw PlanStateMismatch("member " + std::to_string(m) + " points at non-head " + std::to_string(h));
    }
    for (NodeId d : plan.direct_nodes) require_alive(d, "direct node");
    for (auto [h, to] : plan.next_hop) {
        if (h < 0 || h >= static_cast<NodeId>(nodes.size()) || !is_head[static_cast<std::size_t>(h)])
            throw PlanStateMismatch("next hop given for non-head " + std::to_string(h));
        if (to != kBaseStation && (to < 0 || to >= static_cast<NodeId>(nodes.size()) ||
                                   !is_head[static_cast<std::size_t>(to)]))
            throw PlanStateMismatch("head " + std::to_string(h) + " relays to non-head " + std::to_string(to));
    }

    // Hop depth to the base station; a walk longer than the head count means a cycle.
    depth.assign(nodes.size(), -1);
    const int limit = static_cast<int>(plan.cluster_heads.size());
    for (NodeId h : plan.cluster_heads) {
        int steps = 0;
        NodeId cur = h;
        while (cur != kBaseStation) {
            if (++steps > limit) throw PlanStateMismatch("relay graph has a cycle through head " + std::to_string(h));
            cur = plan.next_hop.at(cur);
        }
        depth[static_cast<std::size_t>(h)] = steps;
    }
}

class Ledger {
public:
    Ledger(std::vector<NodeState>& nodes, RoundEnergy& energy) : nodes_(nodes), energy_(energy) {}

    /// Returns false without charging if the node is already dead.
    bool charge(NodeId id, double cost, Charge kind) {
        auto& n = nodes_[static_cast<std::size_t>(id)];
        if (!n.alive) return false;
        const double debit = std::min(cost, n.energy);
        n.energy -= debit;
        energy_.by_node[static_cast<std::size_t>(id)][static_cast<std::size_t>(kind)] += debit;
        if (n.energy <= 0.0) {
            n.energy = 0.0;
            n.alive = false;
        }
        return true;
    }

    bool alive(NodeId id) const { return nodes_[static_cast<std::size_t>(id)].alive; }

private:
    std::vector<NodeState>& nodes_;
    RoundEnergy& energy_;
};

}  // namespace

RoundResult run_round(std::vector<NodeState>& nodes, const RoundPlan& plan, const RadioParams& radio,
                      const Point& base_station) {
    std::vector<int> depth;
    check_plan(nodes, plan, depth);

    RoundResult result;
    result.ch_count = static_cast<int>(plan.cluster_heads.size());
    result.energy.by_node.assign(nodes.size(), {});
    Ledger ledger(nodes, result.energy);
    const double bits = radio.packet_bits;

    for (auto& n : nodes)
        if (n.alive) n.role = Role::member;
    for (NodeId h : plan.cluster_heads) nodes[static_cast<std::size_t>(h)].role = Role::cluster_head;
    for (NodeId d : plan.direct_nodes) nodes[static_cast<std::size_t>(d)].role = Role::direct_to_bs;

    auto pos = [&](NodeId id) { return nodes[static_cast<std::size_t>(id)].pos; };
    std::vector<int> received(nodes.size(), 0);
    std::vector<int> relay_queue(nodes.size(), 0);

    // 1. Member uplinks.
    for (auto [m, h] : plan.member_of) {
        ledger.charge(m, tx_energy(radio, bits, distance(pos(m), pos(h))), Charge::member_tx);
        if (ledger.charge(h, rx_energy(radio, bits), Charge::head_rx)) ++received[static_cast<std::size_t>(h)];
    }

    // 2. Aggregation of own reading plus member packets into one packet.
    std::vector<char> has_packet(nodes.size(), 0);
    for (NodeId h : plan.cluster_heads) {
        const double signals = received[static_cast<std::size_t>(h)] + 1;
        if (ledger.charge(h, agg_energy(radio, bits, signals), Charge::aggregate))
            has_packet[static_cast<std::size_t>(h)] = 1;
    }

    // 3. Head transmissions, farthest from the base station first so relays are queued before forwarding.
    std::vector<NodeId> order = plan.cluster_heads;
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        return depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)];
    });
    for (NodeId h : order) {
        const NodeId to = plan.next_hop.at(h);
        const double dist = distance(pos(h), to == kBaseStation ? base_station : pos(to));
        const double cost = tx_energy(radio, bits, dist);
        const int own = has_packet[static_cast<std::size_t>(h)];
        const int total = own + relay_queue[static_cast<std::size_t>(h)];
        for (int k = 0; k < total; ++k) {
            const Charge kind = (k < own) ? Charge::head_tx : Charge::relay_tx;
            if (!ledger.charge(h, cost, kind)) break;
            if (to == kBaseStation)
                ++result.packets_delivered;
            else if (ledger.charge(to, rx_energy(radio, bits), Charge::relay_rx))
                ++relay_queue[static_cast<std::size_t>(to)];
        }
    }

    // 4. Direct uplinks.
    for (NodeId d : plan.direct_nodes)
        if (ledger.charge(d, tx_energy(radio, bits, distance(pos(d), base_station)), Charge::direct_tx))
            ++result.packets_delivered;

    for (const auto& n : nodes) {
        if (n.alive) ++result.alive;
        result.total_residual += n.energy;
    }
    return result;
}

SimSummary compute_summary(const std::vector<RoundRecord>& trace, int n_nodes) {
    if (trace.empty()) throw EmptyTrace("cannot summarize an empty trace");
    SimSummary s;
    for (const auto& r : trace) {
        if (!s.fnd && r.alive < n_nodes) s.fnd = r.round;
        if (!s.lnd && r.alive == 0) s.lnd = r.round;
    }
    s.total_packets = trace.back().packets_to_bs;
    s.rounds_simulated = trace.back().round;
    return s;
}

SimResult run_sim(const SimConfig& config, const RoundObserver& observer) {
    config.validate();
    SimResult out;
    std::vector<NodeState> nodes = place_nodes(config);
    out.initial_nodes = nodes;
    auto protocol = make_protocol(config);
    const Point bs = config.base_station();

    long long delivered = 0;
    std::vector<NodeState> before;
    for (int r = 0; r < config.max_rounds; ++r) {
        if (std::none_of(nodes.begin(), nodes.end(), [](const NodeState& n) { return n.alive; })) break;
        const RoundPlan plan = protocol->plan_round(nodes, r);
        if (observer) before = nodes;
        const RoundResult res = run_round(nodes, plan, config.radio, bs);
        delivered += res.packets_delivered;
        RoundRecord rec{r + 1, res.alive, delivered, res.ch_count, res.total_residual};
        out.trace.push_back(rec);
        if (observer) observer(RoundObservation{plan, before, nodes, res, rec});
    }
    out.summary = compute_summary(out.trace, config.n_nodes);
    return out;
}

}  // namespace ddrsim
