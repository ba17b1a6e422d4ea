#include "loewner/config.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace loewner {

namespace {

// key -> {default value, description}
const std::map<std::string, std::pair<std::string, std::string>> kRegistry = {
    {"rel_tol", {"1e-10", "solver relative tolerance"}},
    {"abs_tol", {"1e-12", "solver absolute tolerance"}},
    {"min_gap", {"1e-12", "abort threshold on |f - lambda(t)|"}},
    {"tau_switch", {"0.01", "tau-form below this tau for the cube-root driving"}},
    {"n_seed", {"4", "asymptotic seed order for singular/branch starts"}},
    {"seed_bound", {"1e-12", "first omitted seed term bound"}},
    {"delta_floor", {"1e-8", "branch seed offset floor"}},
    {"delta_scale", {"1e-4", "branch seed offset scale (delta = max(floor, scale*t0))"}},
    {"t_max", {"0.1", "slit regime guard"}},
    {"extended_precision", {"0", "integrate in 80-bit long double"}},
    {"trace_switch_frac", {"0.02", "backward flow sigma-substitution fraction"}},
    {"trace_residual_tol", {"1e-6", "prime-end residual warning threshold"}},
    {"gap_stop", {"2e-7", "forward-residual stopping gap"}},
    {"quad_abs_tol", {"1e-10", "Laplace quadrature absolute tolerance"}},
    {"pade_order", {"8", "primary diagonal order of the rational continuation"}},
    {"n_max", {"200", "series truncation order"}},
    {"family", {"plus", "coefficient family (plus|minus|branch|branch_minus|cube_root|holomorphic)"}},
    {"t0", {"0.001", "branch time"}},
    {"t1", {"0.0001", "earlier branch time"}},
    {"eps", {"1", "holomorphic expansion point (exact rational)"}},
    {"t", {"0.001", "evaluation time"}},
    {"t_lo", {"0.0001", "grid lower end"}},
    {"t_hi", {"0.01", "grid upper end"}},
    {"grid_points", {"9", "number of grid points (geometric)"}},
    {"tau", {"0.001", "Borel evaluation point in the tau variable"}},
    {"z_re", {"0", "seed real part"}},
    {"z_im", {"1", "seed imaginary part"}},
    {"t_start", {"0", "flow start time"}},
    {"driving", {"cube_root", "driving function (cube_root|zero|shifted)"}},
    {"format", {"text", "output format (csv|json|text)"}},
    {"out", {"-", "output path ('-' for stdout)"}},
    {"method", {"both", "radius method (root_test|majorant|both)"}},
    {"refine_levels", {"2", "smoothness grid refinement levels"}},
};

}  // namespace

uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

RunConfig::RunConfig() = default;

const std::map<std::string, std::pair<std::string, std::string>>& RunConfig::registry() {
    return kRegistry;
}

bool RunConfig::known(const std::string& key) const { return kRegistry.count(key) != 0; }

void RunConfig::set(const std::string& key, const std::string& value) {
    if (!known(key))
        throw std::invalid_argument("unknown config key '" + key + "'");
    values_[key] = value;
}

bool RunConfig::is_set(const std::string& key) const { return values_.count(key) != 0; }

std::string RunConfig::get_string(const std::string& key) const {
    auto it = values_.find(key);
    if (it != values_.end()) return it->second;
    auto reg = kRegistry.find(key);
    if (reg == kRegistry.end()) throw std::invalid_argument("unknown config key '" + key + "'");
    return reg->second.first;
}

double RunConfig::get_double(const std::string& key) const {
    const std::string s = get_string(key);
    size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "': cannot parse '" + s + "' as number");
    }
    if (pos != s.size())
        throw std::invalid_argument("config key '" + key + "': trailing junk in '" + s + "'");
    return v;
}

int RunConfig::get_int(const std::string& key) const {
    const std::string s = get_string(key);
    size_t pos = 0;
    int v;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "': cannot parse '" + s + "' as integer");
    }
    if (pos != s.size())
        throw std::invalid_argument("config key '" + key + "': trailing junk in '" + s + "'");
    return v;
}

bool RunConfig::get_bool(const std::string& key) const {
    const std::string s = get_string(key);
    if (s == "1" || s == "true" || s == "on") return true;
    if (s == "0" || s == "false" || s == "off") return false;
    throw std::invalid_argument("config key '" + key + "': cannot parse '" + s + "' as bool");
}

Rational RunConfig::get_rational(const std::string& key) const {
    try {
        return parse_rational(get_string(key));
    } catch (const std::exception& e) {
        throw std::invalid_argument("config key '" + key + "': " + e.what());
    }
}

FlowConfig RunConfig::flow() const {
    FlowConfig f;
    f.rel_tol = get_double("rel_tol");
    f.abs_tol = get_double("abs_tol");
    f.min_gap = get_double("min_gap");
    f.tau_switch = get_double("tau_switch");
    f.n_seed = get_int("n_seed");
    f.seed_bound = get_double("seed_bound");
    f.delta_floor = get_double("delta_floor");
    f.delta_scale = get_double("delta_scale");
    f.t_max = get_double("t_max");
    f.extended_precision = get_bool("extended_precision");
    f.trace_switch_frac = get_double("trace_switch_frac");
    f.trace_residual_tol = get_double("trace_residual_tol");
    f.gap_stop = get_double("gap_stop");
    f.validate();
    return f;
}

std::string RunConfig::serialize() const {
    std::string out = "subcommand = " + subcommand_ + "\n";
    for (const auto& [key, def] : kRegistry) {
        auto it = values_.find(key);
        out += key + " = " + (it != values_.end() ? it->second : def.first) + "\n";
    }
    return out;
}

uint64_t RunConfig::hash() const { return fnv1a64(serialize()); }

std::string RunConfig::hash_hex() const {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
    return buf;
}

void RunConfig::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash_pos = line.find('#');
        if (hash_pos != std::string::npos) line.erase(hash_pos);
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            if (a == std::string::npos) return std::string();
            const auto b = s.find_last_not_of(" \t\r");
            return s.substr(a, b - a + 1);
        };
        const std::string t = trim(line);
        if (t.empty()) continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config file " + path + ":" + std::to_string(lineno) +
                                        ": expected 'key = value'");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key == "subcommand") {  // serialized configs carry it; harmless to accept
            if (!value.empty()) subcommand_ = value;
            continue;
        }
        if (!known(key))
            throw std::invalid_argument("config file " + path + ":" + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
        if (value.empty())
            throw std::invalid_argument("config file " + path + ":" + std::to_string(lineno) +
                                        ": empty value for '" + key + "'");
        values_[key] = value;
    }
}

RunConfig RunConfig::from_file_and_overrides(
    const std::string& subcommand, const std::string& config_path,
    const std::vector<std::pair<std::string, std::string>>& overrides) {
    RunConfig cfg;
    cfg.set_subcommand(subcommand);
    if (!config_path.empty()) cfg.load_file(config_path);
    for (const auto& [k, v] : overrides) cfg.set(k, v);
    return cfg;
}

}  // namespace loewner
