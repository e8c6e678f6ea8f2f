#include "ddrsim/config.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ddrsim/errors.hpp"

namespace ddrsim {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

bool parse_bool(std::string_view v, std::string_view what) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError(std::string(what) + ": expected true/false, got '" + std::string(v) + "'");
}

std::string number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

double parse_double(std::string_view text, std::string_view what) {
    double v = 0.0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || text.empty())
        throw ConfigError(std::string(what) + ": expected a number, got '" + std::string(text) + "'");
    return v;
}

long long parse_integer(std::string_view text, std::string_view what) {
    long long v = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || text.empty())
        throw ConfigError(std::string(what) + ": expected an integer, got '" + std::string(text) + "'");
    return v;
}

std::vector<ConfigEntry> parse_key_values(std::string_view text) {
    std::vector<ConfigEntry> out;
    int line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        ConfigEntry e{std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))), line_no};
        if (e.key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
        out.push_back(std::move(e));
    }
    return out;
}

SimConfig ConfigDraft::finish() const {
    SimConfig c = config;
    if (ring_count) c.ring_spacing = c.field_side / (2.0 * *ring_count);
    return c;
}

bool apply_config_entry(ConfigDraft& draft, const ConfigEntry& e) {
    SimConfig& c = draft.config;
    const std::string& k = e.key;
    const std::string_view v = e.value;
    if (k == "field_side") c.field_side = parse_double(v, k);
    else if (k == "n_nodes") c.n_nodes = static_cast<int>(parse_integer(v, k));
    else if (k == "initial_energy") c.initial_energy = parse_double(v, k);
    else if (k == "ring_spacing") {
        c.ring_spacing = parse_double(v, k);
        draft.ring_count.reset();
    } else if (k == "ring_count") {
        const auto n = parse_integer(v, k);
        if (n < 2) throw ConfigError("ring_count must be at least 2");
        draft.ring_count = static_cast<int>(n);
    }
    else if (k == "protocol") c.protocol = parse_protocol(v);
    else if (k == "e_elec") c.radio.e_elec = parse_double(v, k);
    else if (k == "e_fs") c.radio.e_fs = parse_double(v, k);
    else if (k == "e_mp") c.radio.e_mp = parse_double(v, k);
    else if (k == "e_da") c.radio.e_da = parse_double(v, k);
    else if (k == "packet_bits") c.radio.packet_bits = parse_double(v, k);
    else if (k == "leach_p") c.leach.p = parse_double(v, k);
    else if (k == "max_rounds") c.max_rounds = static_cast<int>(parse_integer(v, k));
    else if (k == "seed") c.seed = static_cast<std::uint64_t>(parse_integer(v, k));
    else if (k == "shared_placement") c.shared_placement = parse_bool(v, k);
    else return false;
    return true;
}

SimConfig parse_config(std::string_view text) {
    ConfigDraft draft;
    for (const auto& e : parse_key_values(text))
        if (!apply_config_entry(draft, e))
            throw ConfigError("line " + std::to_string(e.line) + ": unknown key '" + e.key + "'");
    SimConfig c = draft.finish();
    c.validate();
    return c;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SimConfig load_config(const std::filesystem::path& path) { return parse_config(read_file(path)); }

void apply_seed_override(SimConfig& config, const char* value) {
    if (value == nullptr || *value == '\0') return;
    config.seed = static_cast<std::uint64_t>(parse_integer(trim(value), "DDRSIM_SEED"));
}

std::string config_to_text(const SimConfig& c) {
    std::ostringstream out;
    out << "protocol = " << to_string(c.protocol) << "\n"
        << "field_side = " << number(c.field_side) << "\n"
        << "n_nodes = " << c.n_nodes << "\n"
        << "initial_energy = " << number(c.initial_energy) << "\n";
    if (c.ring_spacing) out << "ring_spacing = " << number(*c.ring_spacing) << "\n";
    out << "e_elec = " << number(c.radio.e_elec) << "\n"
        << "e_fs = " << number(c.radio.e_fs) << "\n"
        << "e_mp = " << number(c.radio.e_mp) << "\n"
        << "e_da = " << number(c.radio.e_da) << "\n"
        << "packet_bits = " << number(c.radio.packet_bits) << "\n"
        << "leach_p = " << number(c.leach.p) << "\n"
        << "max_rounds = " << c.max_rounds << "\n"
        << "seed = " << c.seed << "\n"
        << "shared_placement = " << (c.shared_placement ? "true" : "false") << "\n";
    return out.str();
}

}  // namespace ddrsim
