#pragma once

#include <string>
#include <vector>

#include "ddrsim/engine.hpp"
#include "ddrsim/geometry.hpp"

namespace ddrsim {

/// Inputs of the closed-form three-square energy model. t_energy and r_energy
/// are lumped per-packet costs; phi is the aggregation energy of one head per round.
struct AnalyticParams {
    double rho = 0.0;  // nodes per m^2
    double d = 0.0;    // ring spacing
    double t_energy = 0.0;
    double r_energy = 0.0;
    double phi = 0.0;

    /// Nominal population of a ring-2 segment, 3 rho d^2.
    double middle_population() const { return 3.0 * rho * d * d; }
};

/// Inner square, every node straight to the base station: 4 rho d^2 T.
double inner_square_tx(const AnalyticParams& p);

/// Members of the four segments of a ring: 4 (3 rho d^2 - 1) T. The same
/// expression is used for the middle and the outer ring. Throws
/// InvalidPopulation when 3 rho d^2 < 1.
double ring_members_tx(const AnalyticParams& p);

struct HeadEnergy {
    double tx = 0.0;
    double rx = 0.0;
};

/// All four middle-ring heads: tx = 4 (3 rho d^2 + 4 rho d^2) T + 4 phi,
/// rx = (12 rho d^2 - 4) R. The receive count is scaled by R for
/// dimensional consistency.
HeadEnergy middle_heads_energy(const AnalyticParams& p);

/// One outer-ring head: tx = 4 rho d^2 T + phi, rx = (4 rho d^2 - 1) R.
HeadEnergy outer_head_energy(const AnalyticParams& p);

/// Simulated energy of one role over the first round.
struct RoleSample {
    double energy = 0.0;        // joules debited in the role's events
    double mean_link_m = 0.0;   // mean length of the role's transmissions
    int nodes = 0;              // nodes acting in the role
};

/// First-round accounting of a three-ring DDR run, split by role.
struct FirstRoundObservation {
    double field_side = 0.0;
    int n_nodes = 0;
    double ring_spacing = 0.0;
    double packet_bits = 0.0;

    RoleSample inner_direct;    // inner-square uplinks to the base station
    RoleSample middle_members;  // ring-2 member uplinks
    RoleSample outer_members;   // ring-3 member uplinks
    RoleSample middle_heads_tx; // ring-2 heads: own + relayed transmissions and aggregation
    RoleSample middle_heads_rx; // ring-2 heads: member and relayed receptions
    RoleSample outer_head_tx;   // ring-3 heads, per head: transmission and aggregation
    RoleSample outer_head_rx;   // ring-3 heads, per head: member receptions
    int outer_segment_population = 0;   // mean nodes per ring-3 segment
    int middle_segment_population = 0;  // mean nodes per ring-2 segment
};

/// Simulates round 0 of `config` and splits the charged energy by role.
/// Throws ConfigMismatch unless the config is DDR with exactly three rings.
FirstRoundObservation observe_first_round(const SimConfig& config);

struct Prediction {
    std::string quantity;
    double predicted_j = 0.0;
    double assumed_population = 0.0;  // nodes or packets the closed form counts
    double t_energy_j = 0.0;
    double phi_j = 0.0;
};

struct Predictions {
    double field_side = 0.0;
    int n_nodes = 0;
    double ring_spacing = 0.0;
    double rho = 0.0;
    std::vector<Prediction> items;
};

/// Closed-form predictions calibrated on the observation's mean link lengths:
/// T = packet_bits e_elec + amplifier at the role's mean link, R = packet_bits
/// e_elec, phi = aggregation of the population the closed form assumes.
Predictions predict(const SimConfig& config, const FirstRoundObservation& obs);

/// |predicted - simulated| / |simulated|; 0 when both are 0, infinity when only
/// the simulated value is 0.
double relative_deviation(double predicted, double simulated);

struct CrosscheckEntry {
    std::string quantity;
    double predicted_j = 0.0;
    double simulated_j = 0.0;
    double deviation = 0.0;
    bool flagged = false;
    double assumed_population = 0.0;
    double simulated_population = 0.0;
    double t_energy_j = 0.0;
    double phi_j = 0.0;
};

struct CrosscheckReport {
    double tolerance = 0.0;
    double field_side = 0.0;
    int n_nodes = 0;
    double ring_spacing = 0.0;
    double rho = 0.0;
    std::vector<CrosscheckEntry> entries;
    std::vector<std::string> notes;

    const CrosscheckEntry& entry(const std::string& quantity) const;
};

/// Compares every prediction with its simulated counterpart and flags
/// deviations above `tolerance`. Throws ConfigMismatch when the two sides were
/// computed for different configurations.
CrosscheckReport crosscheck(const FirstRoundObservation& obs, const Predictions& predictions, double tolerance);

std::string crosscheck_json(const CrosscheckReport& report);

}  // namespace ddrsim
