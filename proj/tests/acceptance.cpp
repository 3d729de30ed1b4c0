// Acceptance runner: executes every verification suite at its pinned
// parameters and prints one pass/fail line per criterion, including the
// runtime budgets. Exit code 0 only if everything holds.

#include <cstdio>
#include <vector>

#include "potts/suites.hpp"

using namespace potts;

namespace {

struct Criterion {
    std::string label;
    bool pass;
    double seconds;
    double limit_seconds;  // 0 = no individual budget
};

double total_ms(const std::vector<CheckResult>& rs) {
    double t = 0;
    for (const auto& r : rs) t += r.wall_ms;
    return t;
}

}  // namespace

int main() {
    const SuiteConfig cfg;  // unset fields = the pinned acceptance grids
    std::vector<Criterion> rows;

    {
        const auto rs = suite_exp_log(cfg);
        rows.push_back({"exp/log identity suite: five identities, p in {3,5,7}, 1000 samples each, "
                        "exact at precision N-4",
                        all_pass(rs), total_ms(rs) / 1000, 5.0});
    }
    {
        const auto rs = suite_contraction(cfg);
        const std::vector<CheckResult> local(rs.begin(), rs.begin() + 1);
        const std::vector<CheckResult> examples(rs.begin() + 1, rs.end());
        rows.push_back({"local-map contraction and boundary identity on 500 random pairs in B",
                        all_pass(local), total_ms(local) / 1000, 5.0});
        rows.push_back({"worked-example reproduction: solved field is the power sequence, "
                        "(p,k) in {3,5,7}x{2,3}, J=p, <=40 iterations, 20 digits",
                        all_pass(examples), total_ms(examples) / 1000, 10.0});
    }
    {
        const auto rs = suite_compatibility(cfg);
        rows.push_back({"compatibility: outer-sphere marginalization at (p,k,n,q)=(5,2,2,3) within "
                        "guarded precision plus truncation, negative control >= 5^-2",
                        all_pass(rs), total_ms(rs) / 1000, 20.0});
    }
    {
        const auto rs = suite_partition(cfg);
        rows.push_back({"partition function: brute-force Z_2 equals the closed form at precision "
                        "N-4 and |Z_n| = 1 (p=5, k=2, q=3)",
                        all_pass(rs), total_ms(rs) / 1000, 0.0});
    }
    {
        const auto rs = suite_boundedness(cfg);
        rows.push_back({"boundedness: max |mu| <= 1 on the depth-2 table; |V_n| - k|V_{n-1}| = 2 "
                        "for k in 2..5, n in 1..10",
                        all_pass(rs), total_ms(rs) / 1000, 0.0});
    }
    {
        const auto rs = suite_continuity(cfg);
        rows.push_back({"continuity: shifting lambda(1) by a unit*5^3 moves the field and every "
                        "measure value by at most 5^-3 (equality reported)",
                        all_pass(rs), total_ms(rs) / 1000, 0.0});
    }
    {
        const auto rs = suite_limit(cfg);
        rows.push_back({"limit theorem: J = p^n forces the qualifying set to everything and all "
                        "product-measure ratios within p^-n (p=5, n in {1,2})",
                        all_pass(rs), total_ms(rs) / 1000, 0.0});
    }
    {
        const auto rs = suite_cascade(cfg);
        rows.push_back({"uniqueness cascade: depth-6 root difference <= 5^-6 x boundary difference "
                        "for 50 random seed pairs",
                        all_pass(rs), total_ms(rs) / 1000, 0.0});
    }

    int failed = 0;
    double total = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Criterion& c = rows[i];
        const bool in_budget = c.limit_seconds == 0.0 || c.seconds < c.limit_seconds;
        const bool ok = c.pass && in_budget;
        if (!ok) ++failed;
        total += c.seconds;
        std::printf("[%s] criterion %zu: %s (%.2f s%s)\n", ok ? "PASS" : "FAIL", i + 1,
                    c.label.c_str(), c.seconds,
                    c.limit_seconds > 0 ? (", limit " + std::to_string(static_cast<int>(c.limit_seconds)) + " s").c_str()
                                        : "");
    }
    const bool in_total_budget = total < 60.0;
    std::printf("%zu criteria: %zu passed, %d failed; total %.2f s (budget 60 s)\n", rows.size(),
                rows.size() - static_cast<std::size_t>(failed), failed, total);
    if (!in_total_budget) {
        std::printf("[FAIL] total runtime exceeded the 60 s budget\n");
        return 1;
    }
    return failed == 0 ? 0 : 1;
}
