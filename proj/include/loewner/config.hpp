#ifndef LOEWNER_CONFIG_HPP
#define LOEWNER_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "loewner/flow.hpp"

namespace loewner {

// Flat key-value run configuration.  Every key is declared in the registry;
// unknown keys are hard errors so config typos cannot pass silently.  The
// deterministic FNV-1a hash of the resolved configuration is embedded in
// every artifact.
class RunConfig {
public:
    RunConfig();

    void set_subcommand(std::string name) { subcommand_ = std::move(name); }
    const std::string& subcommand() const { return subcommand_; }

    bool known(const std::string& key) const;
    void set(const std::string& key, const std::string& value);  // throws on unknown key
    bool is_set(const std::string& key) const;

    std::string get_string(const std::string& key) const;
    double get_double(const std::string& key) const;
    int get_int(const std::string& key) const;
    bool get_bool(const std::string& key) const;
    Rational get_rational(const std::string& key) const;

    // Solver configuration assembled from the shared keys.
    FlowConfig flow() const;

    // Lossless canonical form: sorted "key = value" lines plus the subcommand.
    std::string serialize() const;
    uint64_t hash() const;
    std::string hash_hex() const;

    // file layout: "key = value" lines, '#' comments, blank lines ignored
    void load_file(const std::string& path);
    static RunConfig from_file_and_overrides(const std::string& subcommand,
                                             const std::string& config_path,
                                             const std::vector<std::pair<std::string, std::string>>& overrides);

    static const std::map<std::string, std::pair<std::string, std::string>>& registry();

private:
    std::string subcommand_;
    std::map<std::string, std::string> values_;  // resolved (defaults + file + flags)
};

uint64_t fnv1a64(const std::string& data);

}  // namespace loewner

#endif
