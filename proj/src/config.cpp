#include "potts/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>

namespace potts {

namespace {

std::string trim(std::string s) {
    s.erase(0, s.find_first_not_of(" \t\r"));
    s.erase(s.find_last_not_of(" \t\r") + 1);
    return s;
}

const char* kKnownKeys[] = {"prime",  "order",  "coupling", "weight", "precision", "depth",
                            "cutoff", "suite",  "out",      "parallel", "seed",    "budget",
                            "perturb"};

}  // namespace

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    RunConfig rc;
    std::string section;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(path + ":" + std::to_string(lineno) + ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        rc.sections_[section][trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return rc;
}

void RunConfig::apply_env(const std::string& prefix) {
    for (const char* key : kKnownKeys) {
        std::string name = prefix;
        for (const char* c = key; *c; ++c) name += static_cast<char>(std::toupper(*c));
        if (const char* value = std::getenv(name.c_str())) sections_[""][key] = value;
    }
}

void RunConfig::set_global(const std::string& key, const std::string& value) { sections_[""][key] = value; }

void RunConfig::set(const std::string& section, const std::string& key, const std::string& value) {
    sections_[section][key] = value;
}

std::optional<std::string> RunConfig::get(const std::string& section, const std::string& key) const {
    if (!section.empty()) {
        auto sit = sections_.find(section);
        if (sit != sections_.end()) {
            auto it = sit->second.find(key);
            if (it != sit->second.end()) return it->second;
        }
    }
    auto git = sections_.find("");
    if (git != sections_.end()) {
        auto it = git->second.find(key);
        if (it != git->second.end()) return it->second;
    }
    return std::nullopt;
}

SuiteConfig RunConfig::suite_config(const std::string& suite) const {
    SuiteConfig sc;
    const auto lookup = [&](const char* key) { return get(suite, key); };
    if (auto v = lookup("prime")) sc.prime = std::stoull(*v);
    if (auto v = lookup("order")) sc.order = std::stoi(*v);
    if (auto v = lookup("coupling")) sc.coupling = *v;
    if (auto v = lookup("precision")) sc.precision = std::stoi(*v);
    if (auto v = lookup("depth")) sc.depth = std::stoi(*v);
    if (auto v = lookup("cutoff"); v && *v != "auto") sc.cutoff = std::stoi(*v);
    if (auto v = lookup("weight")) sc.weight = *v;
    if (auto v = lookup("seed")) sc.rng_seed = std::stoull(*v);
    if (auto v = lookup("parallel")) sc.threads = std::max(1, std::stoi(*v));
    if (auto v = lookup("budget")) sc.budget = std::stoll(*v);
    if (auto v = lookup("perturb")) sc.inject_perturbation = (*v == "1" || *v == "true" || *v == "yes");
    return sc;
}

}  // namespace potts
