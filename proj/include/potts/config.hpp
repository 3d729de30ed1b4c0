#pragma once

#include <map>
#include <optional>
#include <string>

#include "potts/suites.hpp"

namespace potts {

/// Flat key-value run configuration with one section per suite. Values are
/// merged with increasing precedence: file, POTTS_* environment variables,
/// command-line flags.
class RunConfig {
public:
    RunConfig() = default;
    static RunConfig from_file(const std::string& path);

    void apply_env(const std::string& prefix = "POTTS_");
    void set_global(const std::string& key, const std::string& value);
    void set(const std::string& section, const std::string& key, const std::string& value);

    // Section value with fallback to the global section.
    std::optional<std::string> get(const std::string& section, const std::string& key) const;
    std::optional<std::string> get_global(const std::string& key) const { return get("", key); }

    SuiteConfig suite_config(const std::string& suite) const;

private:
    std::map<std::string, std::map<std::string, std::string>> sections_;
};

}  // namespace potts
