#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "potts/config.hpp"
#include "potts/measure.hpp"
#include "potts/report.hpp"
#include "potts/suites.hpp"

using namespace potts;

namespace {

struct Resolved {
    PadicContext ctx;
    ModelParams params;
    Weight weight;
    int depth;
    int cutoff;
    BuildOptions options;
};

Resolved resolve_model(const RunConfig& rc) {
    const auto prime = static_cast<std::uint64_t>(std::stoull(rc.get_global("prime").value_or("5")));
    const int precision = std::stoi(rc.get_global("precision").value_or("32"));
    const PadicContext ctx(prime, precision);
    const int order = std::stoi(rc.get_global("order").value_or("2"));
    const std::string coupling = rc.get_global("coupling").value_or(std::to_string(prime));
    ModelParams params = ModelParams::make(ctx, order, PadicNumber::parse(ctx, coupling));
    Weight weight = load_weight(rc.get_global("weight").value_or("paper-example"), params);
    const int depth = std::stoi(rc.get_global("depth").value_or("2"));
    const std::string cutoff = rc.get_global("cutoff").value_or("auto");
    const int q = cutoff == "auto" ? weight.support_cutoff(precision) : std::stoi(cutoff);
    BuildOptions options;
    options.threads = std::max(1, std::stoi(rc.get_global("parallel").value_or("1")));
    if (auto b = rc.get_global("budget")) options.budget = std::stoll(*b);
    return Resolved{ctx, std::move(params), std::move(weight), depth, q, options};
}

int cmd_solve(const RunConfig& rc) {
    const Resolved r = resolve_model(rc);
    const int target = r.ctx.precision();
    const SolveResult solved = fixed_point_solve(r.weight, r.params, target);
    const LogField h = log_from_hat(solved.field, r.weight);

    std::cout << "p=" << r.ctx.prime() << " k=" << r.params.order()
              << " J=" << r.params.coupling().str() << " N=" << r.ctx.precision()
              << " weight=" << r.weight.family_name() << "\n";
    std::cout << "iterations: " << solved.iterations << "\n";
    std::cout << "final delta: " << solved.final_delta.str() << "\n";
    std::cout << "boundary field (hat):\n";
    std::size_t shown = 0;
    for (const auto& [idx, v] : solved.field.hat.entries()) {
        if (shown++ == 12) {
            std::cout << "  ... " << (solved.field.hat.entries().size() - 12) << " more coordinates\n";
            break;
        }
        std::cout << "  " << idx << ": " << v.str() << "\n";
    }
    std::cout << "log field (h_i - h_0):\n";
    shown = 0;
    for (const auto& [idx, v] : h.values()) {
        if (shown++ == 12) {
            std::cout << "  ... " << (h.values().size() - 12) << " more coordinates\n";
            break;
        }
        std::cout << "  " << idx << ": " << v.str() << "\n";
    }

    if (auto out = rc.get_global("out")) {
        nlohmann::json hat_json = nlohmann::json::object();
        for (const auto& [idx, v] : solved.field.hat.entries()) hat_json[std::to_string(idx)] = v.str();
        nlohmann::json log_json = nlohmann::json::object();
        for (const auto& [idx, v] : h.values()) log_json[std::to_string(idx)] = v.str();
        nlohmann::json doc{{"p", r.ctx.prime()},
                           {"k", r.params.order()},
                           {"J", r.params.coupling().str()},
                           {"N", r.ctx.precision()},
                           {"weight", r.weight.family_name()},
                           {"iterations", solved.iterations},
                           {"final_delta", solved.final_delta.str()},
                           {"tail", "p^-" + std::to_string(solved.field.hat.tail_exponent())},
                           {"hat", hat_json},
                           {"log_field", log_json}};
        std::ofstream os(*out);
        if (!os) throw ConfigError("cannot write output file: " + *out);
        os << doc.dump(2) << "\n";
    }
    return 0;
}

int cmd_verify(const RunConfig& rc) {
    const std::string suite = rc.get_global("suite").value_or("all");
    if (!is_suite_name(suite)) {
        std::cerr << "error: unknown suite name: " << suite << "\n";
        return 2;
    }
    std::vector<CheckResult> results;
    const std::vector<std::string> names =
        suite == "all" ? suite_names() : std::vector<std::string>{suite};
    for (const auto& name : names) {
        const auto rs = run_suite(name, rc.suite_config(name));
        results.insert(results.end(), rs.begin(), rs.end());
    }
    for (const auto& r : results) print_line(std::cout, r);
    const bool ok = all_pass(results);
    std::cout << (ok ? "all checks passed" : "some checks FAILED") << " (" << results.size()
              << " checks)\n";
    if (auto out = rc.get_global("out")) {
        std::ofstream os(*out);
        if (!os) throw ConfigError("cannot write output file: " + *out);
        os << to_json(results).dump(2) << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_measure(const RunConfig& rc) {
    const Resolved r = resolve_model(rc);
    const SolveResult solved = fixed_point_solve(r.weight, r.params, r.ctx.precision());
    const LogField h = log_from_hat(solved.field, r.weight);
    const FiniteVolumeMeasure m = build_measure(r.params, r.weight, h, r.depth, r.cutoff, r.options);
    if (auto out = rc.get_global("out")) {
        std::ofstream os(*out);
        if (!os) throw ConfigError("cannot write output file: " + *out);
        write_measure_csv(os, m);
        std::cout << "wrote " << m.count() << " rows to " << *out << "\n";
    } else {
        write_measure_csv(std::cout, m);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact p-adic Gibbs measures of the countable-state Potts model on a Cayley tree"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, prime, order, coupling, weight, precision, depth, cutoff, suite, out,
        parallel, seed, budget;
    bool perturb = false;
    app.add_option("--config", config_path, "run configuration file (key = value with [suite] sections)");
    app.add_option("--prime,-p", prime, "prime p");
    app.add_option("--order,-k", order, "tree order k");
    app.add_option("--coupling,-J", coupling, "coupling J: rational a/b or canonical p-adic literal");
    app.add_option("--weight,-w", weight, "weight: geometric | paper-example | <spec file>");
    app.add_option("--precision,-N", precision, "significant base-p digits carried");
    app.add_option("--depth,-n", depth, "tree depth n");
    app.add_option("--cutoff,-q", cutoff, "state alphabet cutoff q, or 'auto'");
    app.add_option("--suite,-s", suite, "verification suite name or 'all'");
    app.add_option("--out,-o", out, "output file (JSON report / CSV table)");
    app.add_option("--parallel", parallel, "worker threads for measure enumeration");
    app.add_option("--seed", seed, "seed for the randomized suites");
    app.add_option("--budget", budget, "enumeration budget (configurations)");
    app.add_flag("--perturb", perturb, "inject a field perturbation (negative-control demo)");

    auto* sub_solve = app.add_subcommand("solve", "solve the boundary-field fixed point");
    auto* sub_verify = app.add_subcommand("verify", "run verification suites and report");
    auto* sub_measure = app.add_subcommand("measure", "export a finite-volume measure table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        RunConfig rc;
        std::string path = config_path;
        if (path.empty())
            if (const char* env = std::getenv("POTTS_CONFIG")) path = env;
        if (!path.empty()) rc = RunConfig::from_file(path);
        rc.apply_env();
        if (!prime.empty()) rc.set_global("prime", prime);
        if (!order.empty()) rc.set_global("order", order);
        if (!coupling.empty()) rc.set_global("coupling", coupling);
        if (!weight.empty()) rc.set_global("weight", weight);
        if (!precision.empty()) rc.set_global("precision", precision);
        if (!depth.empty()) rc.set_global("depth", depth);
        if (!cutoff.empty()) rc.set_global("cutoff", cutoff);
        if (!suite.empty()) rc.set_global("suite", suite);
        if (!out.empty()) rc.set_global("out", out);
        if (!parallel.empty()) rc.set_global("parallel", parallel);
        if (!seed.empty()) rc.set_global("seed", seed);
        if (!budget.empty()) rc.set_global("budget", budget);
        if (perturb) rc.set_global("perturb", "1");

        if (sub_solve->parsed()) return cmd_solve(rc);
        if (sub_verify->parsed()) return cmd_verify(rc);
        if (sub_measure->parsed()) return cmd_measure(rc);
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
