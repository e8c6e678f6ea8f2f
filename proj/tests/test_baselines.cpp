#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ddrsim/baselines.hpp"
#include "ddrsim/errors.hpp"

using namespace ddrsim;

namespace {

std::vector<NodeState> grid_nodes(int side, double spacing, double energy = 0.5) {
    std::vector<NodeState> nodes;
    for (int i = 0; i < side * side; ++i) {
        NodeState n;
        n.id = i;
        n.pos = {spacing * (i % side) + 1.0, spacing * (i / side) + 1.0};
        n.energy = energy;
        nodes.push_back(n);
    }
    return nodes;
}

double assignment_cost(const std::vector<NodeState>& nodes, const std::vector<NodeId>& heads) {
    double total = 0.0;
    for (const auto& n : nodes) {
        double best = std::numeric_limits<double>::infinity();
        for (NodeId h : heads) best = std::min(best, distance(n.pos, nodes[static_cast<std::size_t>(h)].pos));
        total += best;
    }
    return total;
}

}  // namespace

TEST_CASE("LEACH threshold") {
    CHECK(leach_threshold(0.05, 0, true) == doctest::Approx(0.05));
    CHECK(leach_threshold(0.05, 19, true) == 1.0);
    CHECK(leach_threshold(0.05, 20, true) == doctest::Approx(0.05));
    CHECK(leach_threshold(0.05, 10, true) == doctest::Approx(0.05 / (1 - 0.5)));
    for (int r : {0, 7, 19, 123}) CHECK(leach_threshold(0.05, r, false) == 0.0);

    for (double p : {0.01, 0.05, 0.1, 0.3, 0.4, 0.7}) {
        for (int r = 0; r < 300; ++r) {
            const double t = leach_threshold(p, r, true);
            CHECK(t >= p);
            CHECK(t <= 1.0);
        }
    }
    CHECK_THROWS_AS(LeachParams{0.0}.validate(), ConfigError);
    CHECK_THROWS_AS(LeachParams{1.0}.validate(), ConfigError);
    CHECK(LeachParams{0.05}.epoch() == 20);
}

TEST_CASE("LEACH without eligible nodes sends everything direct") {
    auto nodes = grid_nodes(4, 10);
    std::vector<int> served(nodes.size(), 0);  // all served in epoch 0
    Rng rng(1, Stream::protocol);
    const auto plan = leach_round_plan(nodes, LeachParams{0.05}, 5, served, rng);
    CHECK(plan.cluster_heads.empty());
    CHECK(plan.direct_nodes.size() == nodes.size());
    CHECK(plan.member_of.empty());
}

TEST_CASE("LEACH single self-elected node") {
    auto nodes = grid_nodes(1, 10);
    std::vector<int> served(1, -1);
    Rng rng(1, Stream::protocol);
    // Last round of the epoch: threshold 1.
    const auto plan = leach_round_plan(nodes, LeachParams{0.05}, 19, served, rng);
    CHECK(plan.cluster_heads == std::vector<NodeId>{0});
    CHECK(plan.member_of.empty());
    CHECK(plan.next_hop.at(0) == kBaseStation);
}

TEST_CASE("LEACH head count averages p * N") {
    auto nodes = grid_nodes(10, 10);
    LeachProtocol leach(LeachParams{0.05}, 42, nodes.size());
    double total = 0.0;
    for (int r = 0; r < 1000; ++r) total += static_cast<double>(leach.plan_round(nodes, r).cluster_heads.size());
    CHECK(std::abs(total / 1000.0 - 5.0) <= 1.0);
}

TEST_CASE("LEACH epoch: every node is head exactly once") {
    auto nodes = grid_nodes(10, 10);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        LeachProtocol leach(LeachParams{0.05}, seed, nodes.size());
        for (int epoch = 0; epoch < 3; ++epoch) {
            std::vector<int> times(nodes.size(), 0);
            for (int r = 20 * epoch; r < 20 * (epoch + 1); ++r)
                for (NodeId h : leach.plan_round(nodes, r).cluster_heads) ++times[static_cast<std::size_t>(h)];
            for (int t : times) CHECK(t == 1);
        }
    }
}

TEST_CASE("LEACH members join the nearest head") {
    auto nodes = grid_nodes(6, 10);
    LeachProtocol leach(LeachParams{0.1}, 9, nodes.size());
    for (int r = 0; r < 30; ++r) {
        const auto plan = leach.plan_round(nodes, r);
        for (auto [m, h] : plan.member_of) {
            for (NodeId other : plan.cluster_heads)
                CHECK(distance(nodes[static_cast<std::size_t>(m)].pos, nodes[static_cast<std::size_t>(h)].pos) <=
                      distance(nodes[static_cast<std::size_t>(m)].pos, nodes[static_cast<std::size_t>(other)].pos));
        }
    }
}

TEST_CASE("LEACH-C candidate set") {
    auto nodes = grid_nodes(10, 10, 0.1);
    CHECK(leachc_candidates(nodes).size() == 100);
    nodes[17].energy = 0.09;
    const auto c = leachc_candidates(nodes);
    CHECK(c.size() == 99);
    CHECK(std::find(c.begin(), c.end(), 17) == c.end());
    nodes[3].alive = false;
    CHECK(leachc_candidates(nodes).size() == 98);
}

TEST_CASE("LEACH-C k = 2 on square corners matches the brute-force optimum") {
    std::vector<NodeState> nodes(4);
    const Point corners[4] = {{0, 0}, {10, 0}, {10, 10}, {0, 10}};
    for (int i = 0; i < 4; ++i) {
        nodes[static_cast<std::size_t>(i)].id = i;
        nodes[static_cast<std::size_t>(i)].pos = corners[i];
        nodes[static_cast<std::size_t>(i)].energy = 0.5;
    }
    const auto heads = select_medoids(nodes, leachc_candidates(nodes), 2);
    REQUIRE(heads.size() == 2);
    // Opposite corners are 0-2 or 1-3.
    CHECK(((heads[0] == 0 && heads[1] == 2) || (heads[0] == 1 && heads[1] == 3)));

    double best = std::numeric_limits<double>::infinity();
    for (NodeId a = 0; a < 4; ++a)
        for (NodeId b = a + 1; b < 4; ++b) best = std::min(best, assignment_cost(nodes, {a, b}));
    CHECK(assignment_cost(nodes, heads) == doctest::Approx(best));
}

TEST_CASE("LEACH-C plans") {
    auto nodes = grid_nodes(10, 10);
    for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i].energy = 0.2 + 0.003 * static_cast<double>(i % 37);
    const auto plan = leachc_round_plan(nodes, LeachParams{0.05}, 0);
    CHECK(plan.cluster_heads.size() == 5);
    double mean = 0.0;
    for (const auto& n : nodes) mean += n.energy;
    mean /= static_cast<double>(nodes.size());
    for (NodeId h : plan.cluster_heads) CHECK(nodes[static_cast<std::size_t>(h)].energy >= mean);
    CHECK(plan.member_of.size() == nodes.size() - 5);

    // No RNG in the centralized path.
    const auto again = leachc_round_plan(nodes, LeachParams{0.05}, 0);
    CHECK(again.cluster_heads == plan.cluster_heads);
    CHECK(again.member_of == plan.member_of);

    // k never drops below one.
    for (std::size_t i = 1; i < nodes.size(); ++i) nodes[i].alive = false;
    const auto lone = leachc_round_plan(nodes, LeachParams{0.05}, 3);
    CHECK(lone.cluster_heads == std::vector<NodeId>{0});
}
