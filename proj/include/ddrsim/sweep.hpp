#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ddrsim/engine.hpp"

namespace ddrsim {

struct SweepCell {
    double field_side = 0.0;
    int n_nodes = 0;
    int ring_count = 0;
};

/// Cells x protocols x seeds on top of a shared base config.
///
/// Text form uses the config syntax plus three list keys:
///
///     cell = 100 100 3          # field_side n_nodes ring_count, repeatable
///     protocols = ddr leach leach-c
///     seeds = 1..10             # or an explicit list: 1 2 3
///
/// Every other key sets the base config (protocol is not allowed).
struct SweepSpec {
    SimConfig base;
    std::vector<SweepCell> cells;
    std::vector<ProtocolKind> protocols;
    std::vector<std::uint64_t> seeds;

    /// Throws ConfigError if any list is empty or a cell breaks the geometry.
    void validate() const;
    std::size_t run_count() const { return cells.size() * protocols.size() * seeds.size(); }
};

SweepSpec parse_sweep(std::string_view text);

/// Scalability rows (field side / nodes / rings): 100/100/3, 134/134/4, 150/150/5, 200/200/6.
std::vector<SweepCell> scalability_cells();

SimConfig cell_config(const SweepSpec& spec, const SweepCell& cell, ProtocolKind protocol, std::uint64_t seed);

struct SweepRun {
    SweepCell cell;
    ProtocolKind protocol = ProtocolKind::ddr;
    std::uint64_t seed = 0;
    SimConfig config;
    std::optional<SimResult> result;
    std::string error;  // set when the run failed

    /// Stable file-name stem, e.g. "L120_N144_R3_ddr_s7".
    std::string key() const;
};

/// Runs every (cell, protocol, seed) with up to `jobs` worker threads. Results
/// come back in cell, then protocol, then seed order regardless of `jobs`.
std::vector<SweepRun> run_sweep(const SweepSpec& spec, int jobs);

/// Aggregate CSV with header kSweepHeader; failed runs carry "error" in the
/// result columns, unreached FND/LND are empty cells.
std::string sweep_csv(const std::vector<SweepRun>& runs);

}  // namespace ddrsim
