#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace potts {

/// One verification record: what was checked, at which parameters, the
/// residual it measured (as an exact p^-t string), and the verdict.
struct CheckResult {
    std::string check;
    nlohmann::json params;
    std::string residual;
    bool pass = false;
    double wall_ms = 0.0;
    std::string note;
};

inline nlohmann::json to_json(const CheckResult& r) {
    return nlohmann::json{{"check_name", r.check}, {"parameters", r.params},
                          {"residual_norm", r.residual}, {"pass", r.pass},
                          {"wall_time_ms", r.wall_ms},  {"note", r.note}};
}

inline nlohmann::json to_json(const std::vector<CheckResult>& rs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rs) arr.push_back(to_json(r));
    return arr;
}

inline void print_line(std::ostream& out, const CheckResult& r) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.check;
    if (!r.residual.empty()) out << "  residual=" << r.residual;
    if (!r.note.empty()) out << "  " << r.note;
    out << "  (" << r.wall_ms << " ms)\n";
}

inline bool all_pass(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return true;
}

}  // namespace potts
