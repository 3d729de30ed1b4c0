#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// End-to-end tests driving the built CLI binary. The path arrives through
// the POTTS_CLI environment variable (set by ctest).

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunOutcome {
    int exit_code;
    std::string output;  // stdout + stderr
};

std::string cli_path() {
    const char* p = std::getenv("POTTS_CLI");
    REQUIRE_MESSAGE(p != nullptr, "POTTS_CLI must point at the built binary");
    return p;
}

RunOutcome run_cli(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) output.append(buf.data(), n);
    const int status = pclose(pipe);
    return RunOutcome{WEXITSTATUS(status), output};
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("solve prints the field and exits cleanly") {
    const RunOutcome r = run_cli("solve -p 5 -k 2 -J 5 -w paper-example");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("iterations:") != std::string::npos);
    CHECK(r.output.find("boundary field (hat):") != std::string::npos);
    // first coordinate of the worked example is 5 * unit
    CHECK(r.output.find("  1: 5^1 * [1,0") != std::string::npos);
}

TEST_CASE("zero coupling is rejected with a named error") {
    const RunOutcome r = run_cli("solve -p 5 -J 0");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("coupling norm out of range") != std::string::npos);
}

TEST_CASE("unknown suite exits with a usage error") {
    const RunOutcome r = run_cli("verify --suite nonsense");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("unknown suite name") != std::string::npos);
}

TEST_CASE("single suite passes and reports per-check lines") {
    const RunOutcome r = run_cli("verify --suite boundedness");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[PASS]") != std::string::npos);
    CHECK(r.output.find("all checks passed") != std::string::npos);
}

TEST_CASE("perturbation flag turns the compatibility suite red") {
    const RunOutcome r = run_cli("verify --suite compatibility --perturb");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("[FAIL]") != std::string::npos);
    CHECK(r.output.find("residual=5^-2") != std::string::npos);
}

TEST_CASE("measure export row counts") {
    const RunOutcome small = run_cli("measure -p 5 -k 2 -J 5 -n 1 -q 3 -o /tmp/potts_m1.csv");
    CHECK(small.exit_code == 0);
    std::ifstream in("/tmp/potts_m1.csv");
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string csv = ss.str();
    CHECK(count_lines(csv) == 81 + 4);  // 3 comment lines + header + 3^4 rows
    CHECK(csv.find("index,configuration,mu") != std::string::npos);
    CHECK(csv.find("# Z = ") != std::string::npos);

    const RunOutcome large = run_cli("measure -p 5 -k 3 -J 5 -n 2 -q 5");
    CHECK(large.exit_code == 2);  // 5^17 configurations exceed the budget
    CHECK(large.output.find("exceeds the enumeration budget") != std::string::npos);
}

TEST_CASE("reports are deterministic modulo wall time") {
    const RunOutcome a = run_cli("verify --suite limit -o /tmp/potts_rep_a.json");
    const RunOutcome b = run_cli("verify --suite limit -o /tmp/potts_rep_b.json");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    auto load = [](const char* path) {
        std::ifstream in(path);
        nlohmann::json j;
        in >> j;
        for (auto& item : j) item.erase("wall_time_ms");
        return j;
    };
    CHECK(load("/tmp/potts_rep_a.json") == load("/tmp/potts_rep_b.json"));
}

TEST_CASE("per-suite config sections scope their overrides") {
    {
        std::ofstream cfg("/tmp/potts_section_cfg.cfg");
        cfg << "[cascade]\ndepth = 4\n";
    }
    const RunOutcome r = run_cli("verify --suite cascade --config /tmp/potts_section_cfg.cfg");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("required ratio at most 5^-4") != std::string::npos);
}

TEST_CASE("config file, environment, and flags stack in precedence order") {
    {
        std::ofstream cfg("/tmp/potts_cli_cfg.cfg");
        cfg << "prime = 7\norder = 2\ncoupling = 7\n";
    }
    const RunOutcome file_only = run_cli("solve --config /tmp/potts_cli_cfg.cfg");
    CHECK(file_only.exit_code == 0);
    CHECK(file_only.output.find("p=7") != std::string::npos);

    setenv("POTTS_PRIME", "5", 1);
    setenv("POTTS_COUPLING", "5", 1);
    const RunOutcome env_run = run_cli("solve --config /tmp/potts_cli_cfg.cfg");
    CHECK(env_run.exit_code == 0);
    CHECK(env_run.output.find("p=5") != std::string::npos);

    const RunOutcome flag_run = run_cli("solve --config /tmp/potts_cli_cfg.cfg -p 3 -J 3");
    CHECK(flag_run.exit_code == 0);
    CHECK(flag_run.output.find("p=3") != std::string::npos);
    unsetenv("POTTS_PRIME");
    unsetenv("POTTS_COUPLING");
}
