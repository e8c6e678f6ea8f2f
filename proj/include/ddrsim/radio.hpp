#pragma once

namespace ddrsim {

/// First-order radio model constants. Defaults are the 50 nJ/bit electronics,
/// 10 pJ/bit/m^2 free-space, 0.0013 pJ/bit/m^4 multipath and 5 nJ/bit/signal
/// aggregation figures, with 4000-bit data packets.
struct RadioParams {
    double e_elec = 50e-9;
    double e_fs = 10e-12;
    double e_mp = 0.0013e-12;
    double e_da = 5e-9;
    double packet_bits = 4000.0;

    /// Throws ConfigError if any constant is not strictly positive.
    void validate() const;
};

/// sqrt(e_fs / e_mp): below it the amplifier follows d^2, at or above it d^4.
double crossover_distance(const RadioParams& params);

double tx_energy(const RadioParams& params, double bits, double dist);
double rx_energy(const RadioParams& params, double bits);
double agg_energy(const RadioParams& params, double bits, double signals);

}  // namespace ddrsim
