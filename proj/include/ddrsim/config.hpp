#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ddrsim/engine.hpp"

namespace ddrsim {

struct ConfigEntry {
    std::string key;
    std::string value;
    int line = 0;
};

/// Splits flat `key = value` text. `#` starts a comment; blank lines are
/// skipped. Throws ConfigError on a line without '='.
std::vector<ConfigEntry> parse_key_values(std::string_view text);

/// Config being assembled from entries. `ring_count` is resolved against the
/// final field side, so key order does not matter.
struct ConfigDraft {
    SimConfig config;
    std::optional<int> ring_count;

    /// Resolves ring_count into ring_spacing. Does not validate.
    SimConfig finish() const;
};

/// Applies one recognised key. Returns false for unknown keys.
/// Recognised keys: field_side, n_nodes, initial_energy, ring_spacing,
/// ring_count, protocol, e_elec, e_fs, e_mp, e_da, packet_bits, leach_p,
/// max_rounds, seed, shared_placement.
bool apply_config_entry(ConfigDraft& draft, const ConfigEntry& entry);

/// Parses a whole experiment config. Unknown keys are errors. The result is
/// validated.
SimConfig parse_config(std::string_view text);
SimConfig load_config(const std::filesystem::path& path);

/// Replaces config.seed when `value` (the DDRSIM_SEED variable) is set.
void apply_seed_override(SimConfig& config, const char* value);

std::string config_to_text(const SimConfig& config);

std::string read_file(const std::filesystem::path& path);

double parse_double(std::string_view text, std::string_view what);
long long parse_integer(std::string_view text, std::string_view what);

}  // namespace ddrsim
