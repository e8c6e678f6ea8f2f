#include "ddrsim/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ddrsim/errors.hpp"

namespace ddrsim {

int LeachParams::epoch() const { return std::max(1, static_cast<int>(std::lround(1.0 / p))); }

void LeachParams::validate() const {
    if (!(p > 0.0 && p < 1.0)) throw ConfigError("LEACH p must lie in (0, 1), got " + std::to_string(p));
}

double leach_threshold(double p, int round, bool eligible) {
    if (!eligible) return 0.0;
    const int epoch = LeachParams{p}.epoch();
    const int pos = round % epoch;
    if (pos == epoch - 1) return 1.0;
    return std::min(1.0, p / (1.0 - p * pos));
}

void attach_to_nearest_head(const std::vector<NodeState>& nodes, RoundPlan& plan) {
    std::sort(plan.cluster_heads.begin(), plan.cluster_heads.end());
    if (plan.cluster_heads.empty()) {
        for (const auto& n : nodes)
            if (n.alive) plan.direct_nodes.push_back(n.id);
        return;
    }
    std::vector<bool> is_head(nodes.size(), false);
    for (NodeId h : plan.cluster_heads) {
        is_head[static_cast<std::size_t>(h)] = true;
        plan.next_hop[h] = kBaseStation;
    }
    for (const auto& n : nodes) {
        if (!n.alive || is_head[static_cast<std::size_t>(n.id)]) continue;
        NodeId best = plan.cluster_heads.front();
        double best_d2 = std::numeric_limits<double>::infinity();
        for (NodeId h : plan.cluster_heads) {  // ascending, so strict < keeps the smaller id on ties
            const double d2 = distance_squared(n.pos, nodes[static_cast<std::size_t>(h)].pos);
            if (d2 < best_d2) {
                best_d2 = d2;
                best = h;
            }
        }
        plan.member_of[n.id] = best;
    }
}

RoundPlan leach_round_plan(const std::vector<NodeState>& nodes, const LeachParams& params, int round,
                           std::vector<int>& last_head_epoch, Rng& rng) {
    const int epoch_index = round / params.epoch();
    RoundPlan plan;
    plan.round = round;
    for (const auto& n : nodes) {
        if (!n.alive) continue;
        const auto idx = static_cast<std::size_t>(n.id);
        const bool eligible = last_head_epoch[idx] != epoch_index;
        if (!eligible) continue;
        if (rng.uniform01() < leach_threshold(params.p, round, true)) {
            plan.cluster_heads.push_back(n.id);
            last_head_epoch[idx] = epoch_index;
        }
    }
    attach_to_nearest_head(nodes, plan);
    return plan;
}

std::vector<NodeId> leachc_candidates(const std::vector<NodeState>& nodes) {
    double sum = 0.0;
    int count = 0;
    for (const auto& n : nodes)
        if (n.alive) {
            sum += n.energy;
            ++count;
        }
    std::vector<NodeId> out;
    if (count == 0) return out;
    const double mean = sum / count;
    // Relative slack absorbs rounding in the mean when all energies are equal.
    const double floor = mean - 1e-12 * std::abs(mean);
    for (const auto& n : nodes)
        if (n.alive && n.energy >= floor) out.push_back(n.id);
    return out;
}

std::vector<NodeId> select_medoids(const std::vector<NodeState>& nodes, const std::vector<NodeId>& candidates,
                                   int k) {
    std::vector<NodeId> medoids;
    if (candidates.empty() || k <= 0) return medoids;
    k = std::min<int>(k, static_cast<int>(candidates.size()));
    auto pos = [&](NodeId id) { return nodes[static_cast<std::size_t>(id)].pos; };

    NodeId first = candidates.front();
    for (NodeId c : candidates)
        if (nodes[static_cast<std::size_t>(c)].energy > nodes[static_cast<std::size_t>(first)].energy) first = c;
    medoids.push_back(first);

    std::vector<double> nearest(candidates.size(), std::numeric_limits<double>::infinity());
    std::vector<bool> chosen(candidates.size(), false);
    chosen[static_cast<std::size_t>(std::find(candidates.begin(), candidates.end(), first) - candidates.begin())] = true;
    while (static_cast<int>(medoids.size()) < k) {
        const Point last = pos(medoids.back());
        std::size_t best = 0;
        double best_d2 = -1.0;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            nearest[i] = std::min(nearest[i], distance_squared(pos(candidates[i]), last));
            if (!chosen[i] && nearest[i] > best_d2) {
                best_d2 = nearest[i];
                best = i;
            }
        }
        chosen[best] = true;
        medoids.push_back(candidates[best]);
    }

    std::vector<NodeId> alive;
    for (const auto& n : nodes)
        if (n.alive) alive.push_back(n.id);

    auto nearest_medoid = [&](const Point& p) {
        std::size_t best = 0;
        double best_d2 = std::numeric_limits<double>::infinity();
        for (std::size_t m = 0; m < medoids.size(); ++m) {
            const double d2 = distance_squared(p, pos(medoids[m]));
            if (d2 < best_d2 || (d2 == best_d2 && medoids[m] < medoids[best])) {
                best_d2 = d2;
                best = m;
            }
        }
        return best;
    };

    std::vector<std::vector<NodeId>> clusters(medoids.size());
    for (NodeId id : alive) clusters[nearest_medoid(pos(id))].push_back(id);

    std::vector<bool> is_candidate(nodes.size(), false);
    for (NodeId c : candidates) is_candidate[static_cast<std::size_t>(c)] = true;

    auto cost = [&](NodeId medoid, const std::vector<NodeId>& cluster) {
        double total = 0.0;
        for (NodeId id : cluster) total += distance(pos(id), pos(medoid));
        return total;
    };
    for (std::size_t m = 0; m < medoids.size(); ++m) {
        double best_cost = cost(medoids[m], clusters[m]);
        for (NodeId c : clusters[m]) {
            if (!is_candidate[static_cast<std::size_t>(c)] || c == medoids[m]) continue;
            const double cc = cost(c, clusters[m]);
            if (cc < best_cost) {
                best_cost = cc;
                medoids[m] = c;
            }
        }
    }
    std::sort(medoids.begin(), medoids.end());
    return medoids;
}

RoundPlan leachc_round_plan(const std::vector<NodeState>& nodes, const LeachParams& params, int round) {
    RoundPlan plan;
    plan.round = round;
    int alive = 0;
    for (const auto& n : nodes) alive += n.alive ? 1 : 0;
    if (alive == 0) return plan;
    const int k = std::max(1, static_cast<int>(std::lround(params.p * alive)));
    plan.cluster_heads = select_medoids(nodes, leachc_candidates(nodes), k);
    attach_to_nearest_head(nodes, plan);
    return plan;
}

}  // namespace ddrsim
