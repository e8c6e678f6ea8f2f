#pragma once

#include <cstdint>
#include <random>

namespace ddrsim {

/// Named RNG streams derived from one experiment seed.
enum class Stream : std::uint64_t { placement = 1, protocol = 2 };

/// mt19937_64 with a platform-independent mapping to [0, 1). The engine's
/// determinism relies on never going through std::uniform_real_distribution,
/// whose output is implementation-defined.
class Rng {
public:
    Rng(std::uint64_t seed, Stream stream);

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace ddrsim
