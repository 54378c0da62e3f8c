// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The beamtrack Authors

// Runs the beamtrack executable as a subprocess.

#include "beamtrack/beamwidth.hpp"
#include "beamtrack/report.hpp"

#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int status = -1;
    std::string out;
};

Outcome run_cli(const std::string& args) {
    const std::string cmd = std::string(BEAMTRACK_CLI_PATH) + " " + args + " 2>/dev/null";
    Outcome o;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 512> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe)) o.out += buf.data();
    const int raw = pclose(pipe);
    o.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return o;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fresh(const std::string& name) {
    const fs::path p = fs::current_path() / ("cli_" + name);
    fs::remove_all(p);
    return p;
}

const std::string kSmall = "--set runs=2 --set k_steps=5 --set s=100";

} // namespace

TEST_CASE("root prints the constant and a tiny residual") {
    const Outcome a = run_cli("root");
    REQUIRE(a.status == 0);
    char expected[64];
    std::snprintf(expected, sizeof expected, "x_star = %.9f\n", beamtrack::solve_root().x_star);
    CHECK(a.out.rfind(expected, 0) == 0);
    CHECK(a.out.find("x_star = 1.16556") == 0);

    const auto pos = a.out.find("residual = ");
    REQUIRE(pos != std::string::npos);
    CHECK(std::abs(std::stod(a.out.substr(pos + 11))) < 1e-9);
    CHECK(run_cli("root").out == a.out);
}

TEST_CASE("beamwidth calculator matches the library") {
    using beamtrack::SteeringAngle;
    for (double e : {0.0, 0.5, 1.0, 2.5, 7.0}) {
        const auto d = beamtrack::select_beamwidth(SteeringAngle::from_degrees(90.0), beamtrack::deg_to_rad(e), 64);
        const Outcome o = run_cli("beamwidth 90 " + std::to_string(e) + " 64");
        REQUIRE(o.status == 0);
        CHECK(o.out == "m_k = " + std::to_string(d.m_k) + "\nclamped = " + (d.clamped ? "true" : "false") + "\n");
    }
    CHECK(run_cli("beamwidth 90 1.0 64").out == "m_k = 43\nclamped = false\n");
    CHECK(run_cli("beamwidth 90 0 64").out == "m_k = 64\nclamped = true\n");
    CHECK(run_cli("beamwidth 90 0.5 64").out == "m_k = 64\nclamped = true\n");

    CHECK(run_cli("beamwidth 180 1 64").status == 2);
    CHECK(run_cli("beamwidth 0 1 64").status == 2);
    CHECK(run_cli("beamwidth 90 -1 64").status == 2);
    CHECK(run_cli("beamwidth 90 1 0").status == 2);
    CHECK(run_cli("beamwidth 90").status == 2);
    CHECK(run_cli("").status != 0);
}

TEST_CASE("run writes parseable outputs") {
    const fs::path out = fresh("smoke");
    const Outcome o = run_cli("run --out " + out.string() + " " + kSmall + " --format csv --format json");
    REQUIRE(o.status == 0);
    CHECK(o.out.find("adaptive") != std::string::npos);
    CHECK(o.out.find("fixed") != std::string::npos);
    CHECK(o.out.find("correlation") != std::string::npos);

    const auto agg = beamtrack::parse_aggregate_csv(slurp(out / "aggregate.csv"));
    CHECK(agg.size() == 5);
    const auto trace = beamtrack::parse_trace_csv(slurp(out / "trace_run0_adaptive.csv"));
    CHECK(trace.size() == 5);
    CHECK(fs::exists(out / "trace_run1_fixed.csv"));
    CHECK(fs::exists(out / "aggregate.json"));
}

TEST_CASE("run is deterministic for a fixed seed") {
    const fs::path a = fresh("det_a"), b = fresh("det_b");
    REQUIRE(run_cli("run --out " + a.string() + " " + kSmall + " --set runs=1 --set seed=7").status == 0);
    REQUIRE(run_cli("run --out " + b.string() + " " + kSmall + " --set runs=1 --set seed=7").status == 0);
    for (const char* f : {"aggregate.csv", "trace_run0_adaptive.csv", "trace_run0_fixed.csv", "config.txt"})
        CHECK(slurp(a / f) == slurp(b / f));

    const fs::path c = fresh("det_c");
    REQUIRE(run_cli("run --out " + c.string() + " " + kSmall + " --set runs=1 --seed 8").status == 0);
    CHECK(slurp(a / "aggregate.csv") != slurp(c / "aggregate.csv"));
}

TEST_CASE("noiseless run reports zero error") {
    const fs::path out = fresh("noiseless");
    REQUIRE(run_cli("run --out " + out.string() + " " + kSmall +
                    " --set sigma_phi_deg=0 --set measurement_noise=false")
                .status == 0);
    for (const auto& row : beamtrack::parse_aggregate_csv(slurp(out / "aggregate.csv"))) {
        CHECK(row.rmse_deg_adaptive < 1e-3);
        CHECK(row.rmse_deg_fixed < 1e-3);
    }
}

TEST_CASE("run reads config files and reports errors with exit codes") {
    const fs::path cfg = fs::current_path() / "cli_test.cfg";
    std::ofstream(cfg) << "runs = 1\nk_steps = 3\ns = 50\n";
    const fs::path out = fresh("cfg");
    REQUIRE(run_cli("run --config " + cfg.string() + " --out " + out.string()).status == 0);
    CHECK(beamtrack::parse_aggregate_csv(slurp(out / "aggregate.csv")).size() == 3);

    std::ofstream(cfg) << "runs = 1\nsigma_ph_deg = 1\n";
    CHECK(run_cli("run --config " + cfg.string() + " --out " + out.string()).status == 2);
    CHECK(run_cli("run --config /nonexistent.cfg").status == 2);
    CHECK(run_cli("run " + kSmall + " --set bogus=1").status == 2);
    CHECK(run_cli("run " + kSmall + " --set m0=0").status == 2);
    CHECK(run_cli("run " + kSmall + " --format xml").status == 2);

    const fs::path blocker = fresh("blocker");
    std::ofstream(blocker) << "x";
    CHECK(run_cli("run " + kSmall + " --out " + (blocker / "sub").string()).status == 3);
}
