#pragma once

#include <optional>
#include <string>
#include <vector>

#include "potts/measure.hpp"
#include "potts/report.hpp"

namespace potts {

/// Suite parameters. Unset fields fall back to each suite's pinned
/// defaults (the grids the checks are calibrated for); set fields narrow
/// the run to that configuration.
struct SuiteConfig {
    std::optional<std::uint64_t> prime;
    std::optional<int> order;
    std::optional<std::string> coupling;  // rational or canonical p-adic literal
    std::optional<int> precision;
    std::optional<int> depth;
    std::optional<int> cutoff;
    std::optional<std::string> weight;  // family name or weight spec file
    std::uint64_t rng_seed = 2024;
    int threads = 1;
    std::int64_t budget = 1'000'000;
    // Fault injection: run the positive checks against a deliberately
    // perturbed field, proving the harness detects broken consistency.
    bool inject_perturbation = false;
};

/// Resolves a weight description ("explicit" needs a spec file; family
/// names are built directly) against model parameters.
Weight load_weight(const std::string& spec, const ModelParams& params);

/// Affine tail rule "a + b*i" (also plain "a" or "b*i").
std::pair<std::int64_t, std::int64_t> parse_affine(const std::string& text);

std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);

/// Runs one named suite ("all" concatenates every suite in order).
std::vector<CheckResult> run_suite(const std::string& name, const SuiteConfig& config);

std::vector<CheckResult> suite_exp_log(const SuiteConfig& config);
std::vector<CheckResult> suite_contraction(const SuiteConfig& config);
std::vector<CheckResult> suite_compatibility(const SuiteConfig& config);
std::vector<CheckResult> suite_partition(const SuiteConfig& config);
std::vector<CheckResult> suite_boundedness(const SuiteConfig& config);
std::vector<CheckResult> suite_continuity(const SuiteConfig& config);
std::vector<CheckResult> suite_limit(const SuiteConfig& config);
std::vector<CheckResult> suite_cascade(const SuiteConfig& config);

}  // namespace potts
