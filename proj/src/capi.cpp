// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The beamtrack Authors

#include "beamtrack/beamtrack.h"

#include "beamtrack/beamwidth.hpp"
#include "beamtrack/config.hpp"
#include "beamtrack/error.hpp"
#include "beamtrack/report.hpp"
#include "beamtrack/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <exception>
#include <new>
#include <string>

struct bt_config_s {
    beamtrack::SimConfig cfg;
};

struct bt_result_s {
    beamtrack::MonteCarloResult result;
};

namespace {

thread_local std::string g_last_error;

bt_status fail(bt_status status, const char* what) {
    g_last_error = what;
    return status;
}

// Maps the core's exception types onto status codes.
template <typename Fn>
bt_status guarded(Fn&& fn) {
    try {
        fn();
        return BT_OK;
    } catch (const beamtrack::ConfigError& e) {
        return fail(BT_ERR_CONFIG, e.what());
    } catch (const beamtrack::IoError& e) {
        return fail(BT_ERR_IO, e.what());
    } catch (const beamtrack::DegenerateStatistics& e) {
        return fail(BT_ERR_DEGENERATE, e.what());
    } catch (const beamtrack::NumericError& e) {
        return fail(BT_ERR_NUMERIC, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(BT_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(BT_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(BT_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(BT_ERR_INTERNAL, "unknown error");
    }
}

#define BT_REQUIRE(cond)                                                                 \
    do {                                                                                 \
        if (!(cond)) return fail(BT_ERR_INVALID_ARGUMENT, "null or invalid argument: " #cond); \
    } while (0)

beamtrack::SteeringAngle angle_deg(double deg) { return beamtrack::SteeringAngle::from_degrees(deg); }

} // namespace

extern "C" {

const char* bt_version(void) { return "1.0.0"; }

const char* bt_last_error(void) { return g_last_error.c_str(); }

bt_status bt_config_create_default(bt_config* out) {
    BT_REQUIRE(out);
    return guarded([&] { *out = new bt_config_s{}; });
}

bt_status bt_config_load_file(const char* path, bt_config* out) {
    BT_REQUIRE(path && out);
    return guarded([&] { *out = new bt_config_s{beamtrack::load_config(path)}; });
}

bt_status bt_config_set(bt_config cfg, const char* key, const char* value) {
    BT_REQUIRE(cfg && key && value);
    return guarded([&] { beamtrack::apply_setting(cfg->cfg, key, value); });
}

bt_status bt_config_assign(bt_config cfg, const char* assignment) {
    BT_REQUIRE(cfg && assignment);
    return guarded([&] { beamtrack::apply_assignment(cfg->cfg, assignment); });
}

bt_status bt_config_set_seed(bt_config cfg, uint64_t seed) {
    BT_REQUIRE(cfg);
    cfg->cfg.seed = seed;
    return BT_OK;
}

bt_status bt_config_validate(bt_config cfg) {
    BT_REQUIRE(cfg);
    return guarded([&] { cfg->cfg.validate(); });
}

bt_status bt_config_format(bt_config cfg, char* buf, size_t len, size_t* needed) {
    BT_REQUIRE(cfg);
    return guarded([&] {
        const std::string text = beamtrack::format_config(cfg->cfg);
        if (needed) *needed = text.size() + 1;
        if (buf && len > 0) {
            const size_t n = std::min(len - 1, text.size());
            std::memcpy(buf, text.data(), n);
            buf[n] = '\0';
        }
    });
}

void bt_config_destroy(bt_config cfg) { delete cfg; }

bt_status bt_run_monte_carlo(bt_config cfg, bt_mode mode, bt_result* out) {
    BT_REQUIRE(cfg && out);
    BT_REQUIRE(mode == BT_MODE_ADAPTIVE || mode == BT_MODE_FIXED);
    return guarded([&] {
        beamtrack::SimConfig c = cfg->cfg;
        c.mode = mode == BT_MODE_ADAPTIVE ? beamtrack::Mode::adaptive : beamtrack::Mode::fixed;
        *out = new bt_result_s{beamtrack::run_monte_carlo(c)};
    });
}

bt_status bt_result_steps(bt_result r, size_t* steps) {
    BT_REQUIRE(r && steps);
    *steps = r->result.metrics.rmse_per_step.size();
    return BT_OK;
}

bt_status bt_result_runs(bt_result r, size_t* runs) {
    BT_REQUIRE(r && runs);
    *runs = r->result.traces.size();
    return BT_OK;
}

bt_status bt_result_step(bt_result r, size_t k, bt_step_metrics* out) {
    BT_REQUIRE(r && out);
    const auto& m = r->result.metrics;
    BT_REQUIRE(k >= 1 && k <= m.rmse_per_step.size());
    out->rmse_deg = beamtrack::rad_to_deg(m.rmse_per_step[k - 1]);
    out->mean_m = m.mean_m_per_step[k - 1];
    out->mean_snr_db = 10.0 * std::log10(m.mean_snr_per_step[k - 1]);
    return BT_OK;
}

bt_status bt_result_correlation(bt_result r, double* out) {
    BT_REQUIRE(r && out);
    *out = r->result.metrics.pearson_e_vs_abs_err;
    if (std::isnan(*out)) return fail(BT_ERR_DEGENERATE, "correlation undefined: zero variance");
    return BT_OK;
}

bt_status bt_summarize(bt_result adaptive, bt_result fixed, bt_summary* out) {
    BT_REQUIRE(adaptive && fixed && out);
    return guarded([&] {
        const auto s = beamtrack::summarize(adaptive->result.metrics, fixed->result.metrics);
        *out = {s.rmse_deg_adaptive, s.rmse_deg_fixed, s.correlation_adaptive, s.mean_m_adaptive};
    });
}

bt_status bt_write_outputs(const char* out_dir, bt_config cfg, bt_result adaptive, bt_result fixed,
                           unsigned formats) {
    BT_REQUIRE(out_dir && cfg && adaptive && fixed);
    return guarded([&] { beamtrack::write_outputs(out_dir, cfg->cfg, adaptive->result, fixed->result, formats); });
}

void bt_result_destroy(bt_result r) { delete r; }

bt_status bt_solve_root(double* x_star, double* residual) {
    BT_REQUIRE(x_star);
    return guarded([&] {
        const double x = beamtrack::solve_root().x_star;
        *x_star = x;
        if (residual) *residual = std::tan(x) - 2.0 * x;
    });
}

bt_status bt_select_beamwidth(double phi_hat_deg, double e_deg, uint32_t m0, uint32_t* m_k, int* clamped) {
    BT_REQUIRE(m_k);
    if (!(phi_hat_deg > 0.0 && phi_hat_deg < 180.0))
        return fail(BT_ERR_INVALID_ARGUMENT, "phi_hat must lie strictly between 0 and 180 degrees");
    return guarded([&] {
        const auto d = beamtrack::select_beamwidth(angle_deg(phi_hat_deg), beamtrack::deg_to_rad(e_deg), m0);
        *m_k = static_cast<uint32_t>(d.m_k);
        if (clamped) *clamped = d.clamped ? 1 : 0;
    });
}

bt_status bt_ideal_m(double phi_hat_deg, double phi_deg, double* out) {
    BT_REQUIRE(out);
    return guarded([&] { *out = beamtrack::ideal_m(angle_deg(phi_hat_deg), angle_deg(phi_deg)); });
}

bt_status bt_normalized_gain(double phi_hat_deg, double phi_deg, uint32_t m, double* out) {
    BT_REQUIRE(out);
    return guarded([&] { *out = beamtrack::normalized_gain(angle_deg(phi_hat_deg), angle_deg(phi_deg), m); });
}

bt_status bt_closed_form_gain(double delta_cos, uint32_t m, double* out) {
    BT_REQUIRE(out);
    return guarded([&] { *out = beamtrack::closed_form_gain(delta_cos, m); });
}

bt_status bt_noise_power_from_snr(double snr0_db, double alpha_re, double alpha_im, uint32_t m0, double* out) {
    BT_REQUIRE(out);
    return guarded([&] { *out = beamtrack::noise_power_from_snr(snr0_db, {alpha_re, alpha_im}, m0); });
}

bt_status bt_receive_snr(double alpha_re, double alpha_im, double n0, double phi_hat_deg, double phi_deg, uint32_t m,
                         double* out) {
    BT_REQUIRE(out);
    return guarded([&] {
        *out = beamtrack::receive_snr({alpha_re, alpha_im}, n0, angle_deg(phi_hat_deg), angle_deg(phi_deg), m);
    });
}

} // extern "C"
