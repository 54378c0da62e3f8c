// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The beamtrack Authors

// beamtrack command-line front end. Talks to the simulator only through the
// C interface in beamtrack.h.
//
//   beamtrack run [--config file] [--out dir] [--set key=value]... [--format csv|json]... [--seed N]
//   beamtrack root
//   beamtrack beamwidth <phi_hat_deg> <e_deg> <m0>
//
// Exit codes: 0 success, 2 configuration/argument error, 3 I/O error.

#include "beamtrack/beamtrack.h"

#include "CLI11.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

int exit_code_for(bt_status s) {
    switch (s) {
    case BT_OK: return kExitOk;
    case BT_ERR_IO: return kExitIo;
    case BT_ERR_CONFIG:
    case BT_ERR_INVALID_ARGUMENT: return kExitConfig;
    default: return 1;
    }
}

int report(bt_status s) {
    std::fprintf(stderr, "beamtrack: %s\n", bt_last_error());
    return exit_code_for(s);
}

struct ConfigDeleter {
    void operator()(bt_config c) const { bt_config_destroy(c); }
};
struct ResultDeleter {
    void operator()(bt_result r) const { bt_result_destroy(r); }
};
using ConfigPtr = std::unique_ptr<bt_config_s, ConfigDeleter>;
using ResultPtr = std::unique_ptr<bt_result_s, ResultDeleter>;

struct RunOptions {
    std::string config_path;
    std::string out_dir = "out";
    std::vector<std::string> overrides;
    std::vector<std::string> formats;
    std::optional<std::uint64_t> seed;
};

int cmd_run(const RunOptions& opt) {
    bt_config raw = nullptr;
    bt_status s = opt.config_path.empty() ? bt_config_create_default(&raw) : bt_config_load_file(opt.config_path.c_str(), &raw);
    if (s != BT_OK) return report(s);
    ConfigPtr cfg(raw);

    for (const auto& kv : opt.overrides)
        if ((s = bt_config_assign(cfg.get(), kv.c_str())) != BT_OK) return report(s);
    if (opt.seed && (s = bt_config_set_seed(cfg.get(), *opt.seed)) != BT_OK) return report(s);
    if ((s = bt_config_validate(cfg.get())) != BT_OK) return report(s);

    unsigned formats = 0;
    for (const auto& f : opt.formats) formats |= f == "json" ? BT_FORMAT_JSON : BT_FORMAT_CSV;
    if (formats == 0) formats = BT_FORMAT_CSV;

    bt_result ra = nullptr;
    bt_result rf = nullptr;
    if ((s = bt_run_monte_carlo(cfg.get(), BT_MODE_ADAPTIVE, &ra)) != BT_OK) return report(s);
    ResultPtr adaptive(ra);
    if ((s = bt_run_monte_carlo(cfg.get(), BT_MODE_FIXED, &rf)) != BT_OK) return report(s);
    ResultPtr fixed(rf);

    if ((s = bt_write_outputs(opt.out_dir.c_str(), cfg.get(), adaptive.get(), fixed.get(), formats)) != BT_OK)
        return report(s);

    bt_summary sum{};
    if ((s = bt_summarize(adaptive.get(), fixed.get(), &sum)) != BT_OK) return report(s);
    std::size_t runs = 0, steps = 0;
    bt_result_runs(adaptive.get(), &runs);
    bt_result_steps(adaptive.get(), &steps);

    std::printf("runs = %zu, steps = %zu\n", runs, steps);
    std::printf("%-10s %16s\n", "mode", "rmse_deg");
    std::printf("%-10s %16.6f\n", "adaptive", sum.rmse_deg_adaptive);
    std::printf("%-10s %16.6f\n", "fixed", sum.rmse_deg_fixed);
    std::printf("mean_m_adaptive = %.6f\n", sum.mean_m_adaptive);
    if (std::isnan(sum.correlation_adaptive))
        std::printf("correlation(e_k, abs_err) = undefined\n");
    else
        std::printf("correlation(e_k, abs_err) = %.6f\n", sum.correlation_adaptive);
    std::printf("output: %s\n", opt.out_dir.c_str());
    return kExitOk;
}

int cmd_root() {
    double x = 0.0, residual = 0.0;
    if (bt_status s = bt_solve_root(&x, &residual); s != BT_OK) return report(s);
    std::printf("x_star = %.9f\n", x);
    std::printf("residual = %.3e\n", residual);
    return kExitOk;
}

int cmd_beamwidth(double phi_hat_deg, double e_deg, std::int64_t m0) {
    if (!(phi_hat_deg > 0.0 && phi_hat_deg < 180.0)) {
        std::fprintf(stderr, "beamtrack: phi_hat_deg must lie strictly between 0 and 180\n");
        return kExitConfig;
    }
    if (!(e_deg >= 0.0) || !std::isfinite(e_deg)) {
        std::fprintf(stderr, "beamtrack: e_deg must be a finite value >= 0\n");
        return kExitConfig;
    }
    if (m0 < 1 || m0 > UINT32_MAX) {
        std::fprintf(stderr, "beamtrack: m0 must be >= 1\n");
        return kExitConfig;
    }
    std::uint32_t m_k = 0;
    int clamped = 0;
    if (bt_status s = bt_select_beamwidth(phi_hat_deg, e_deg, static_cast<std::uint32_t>(m0), &m_k, &clamped);
        s != BT_OK)
        return report(s);
    std::printf("m_k = %u\n", m_k);
    std::printf("clamped = %s\n", clamped ? "true" : "false");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Particle-filter mmWave beam tracking with adaptive beamwidth"};
    app.require_subcommand(1);

    RunOptions run_opt;
    auto* run = app.add_subcommand("run", "Monte Carlo comparison of adaptive and fixed beamwidth");
    run->add_option("--config", run_opt.config_path, "key=value config file (defaults otherwise)");
    run->add_option("--out", run_opt.out_dir, "output directory")->capture_default_str();
    run->add_option("--set", run_opt.overrides, "override a config key (key=value), repeatable");
    run->add_option("--format", run_opt.formats, "output format, repeatable")
        ->check(CLI::IsMember({"csv", "json"}));
    std::uint64_t seed = 0;
    auto* seed_opt = run->add_option("--seed", seed, "master seed (overrides config)");

    app.add_subcommand("root", "print the first positive root of tan x = 2x");

    double phi_hat_deg = 0.0, e_deg = 0.0;
    std::int64_t m0 = 0;
    auto* bw = app.add_subcommand("beamwidth", "active antenna count for a pointing estimate and its error");
    bw->add_option("phi_hat_deg", phi_hat_deg, "estimated AoA in degrees")->required();
    bw->add_option("e_deg", e_deg, "AoA RMSE in degrees")->required();
    bw->add_option("m0", m0, "total antennas")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    if (run->parsed()) {
        if (*seed_opt) run_opt.seed = seed;
        return cmd_run(run_opt);
    }
    if (app.got_subcommand("root")) return cmd_root();
    return cmd_beamwidth(phi_hat_deg, e_deg, m0);
}
