#include "ddrsim/radio.hpp"

#include <cmath>

#include "ddrsim/errors.hpp"

namespace ddrsim {

void RadioParams::validate() const {
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(e_elec) || !positive(e_fs) || !positive(e_mp) || !positive(e_da) ||
        !positive(packet_bits))
        throw ConfigError("radio constants and packet size must all be strictly positive");
}

double crossover_distance(const RadioParams& params) { return std::sqrt(params.e_fs / params.e_mp); }

double tx_energy(const RadioParams& params, double bits, double dist) {
    const double electronics = params.e_elec * bits;
    if (dist < crossover_distance(params)) return electronics + params.e_fs * bits * dist * dist;
    const double d2 = dist * dist;
    return electronics + params.e_mp * bits * d2 * d2;
}

double rx_energy(const RadioParams& params, double bits) { return params.e_elec * bits; }

double agg_energy(const RadioParams& params, double bits, double signals) {
    return params.e_da * bits * signals;
}

}  // namespace ddrsim
