/* SPDX-License-Identifier: Apache-2.0
 * Copyright 2026 The beamtrack Authors
 *
 * C interface to the beamtrack simulator. Objects are opaque handles owned
 * by the caller and released with the matching *_destroy function. Every
 * fallible call returns a bt_status; on failure bt_last_error() describes the
 * problem (thread-local, valid until the next failing call on that thread).
 * Angles are degrees at this boundary.
 */
#ifndef BEAMTRACK_H
#define BEAMTRACK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BEAMTRACK_BUILDING)
#    define BT_API __declspec(dllexport)
#  else
#    define BT_API __declspec(dllimport)
#  endif
#else
#  define BT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bt_status {
    BT_OK = 0,
    BT_ERR_INVALID_ARGUMENT = 1,
    BT_ERR_CONFIG = 2,
    BT_ERR_IO = 3,
    BT_ERR_DEGENERATE = 4,
    BT_ERR_NUMERIC = 5,
    BT_ERR_INTERNAL = 6
} bt_status;

typedef enum bt_mode { BT_MODE_ADAPTIVE = 0, BT_MODE_FIXED = 1 } bt_mode;

enum { BT_FORMAT_CSV = 1u, BT_FORMAT_JSON = 2u };

typedef struct bt_config_s* bt_config;
typedef struct bt_result_s* bt_result;

typedef struct bt_summary {
    double rmse_deg_adaptive;
    double rmse_deg_fixed;
    double correlation_adaptive; /* NaN when undefined */
    double mean_m_adaptive;
} bt_summary;

typedef struct bt_step_metrics {
    double rmse_deg;
    double mean_m;
    double mean_snr_db;
} bt_step_metrics;

BT_API const char* bt_version(void);
BT_API const char* bt_last_error(void);

/* Configuration */
BT_API bt_status bt_config_create_default(bt_config* out);
BT_API bt_status bt_config_load_file(const char* path, bt_config* out);
BT_API bt_status bt_config_set(bt_config cfg, const char* key, const char* value);
BT_API bt_status bt_config_assign(bt_config cfg, const char* assignment); /* "key=value" */
BT_API bt_status bt_config_set_seed(bt_config cfg, uint64_t seed);
BT_API bt_status bt_config_validate(bt_config cfg);
/* Writes the key=value rendering into buf (NUL terminated). *needed receives
 * the full length including the terminator, so a NULL buf may be used to size it. */
BT_API bt_status bt_config_format(bt_config cfg, char* buf, size_t len, size_t* needed);
BT_API void bt_config_destroy(bt_config cfg);

/* Monte Carlo */
BT_API bt_status bt_run_monte_carlo(bt_config cfg, bt_mode mode, bt_result* out);
BT_API bt_status bt_result_steps(bt_result r, size_t* steps);
BT_API bt_status bt_result_runs(bt_result r, size_t* runs);
BT_API bt_status bt_result_step(bt_result r, size_t k, bt_step_metrics* out); /* k is 1-based */
BT_API bt_status bt_result_correlation(bt_result r, double* out);
BT_API bt_status bt_summarize(bt_result adaptive, bt_result fixed, bt_summary* out);
/* formats: bitwise OR of BT_FORMAT_* */
BT_API bt_status bt_write_outputs(const char* out_dir, bt_config cfg, bt_result adaptive, bt_result fixed,
                                  unsigned formats);
BT_API void bt_result_destroy(bt_result r);

/* Array and beamwidth primitives */
BT_API bt_status bt_solve_root(double* x_star, double* residual);
BT_API bt_status bt_select_beamwidth(double phi_hat_deg, double e_deg, uint32_t m0, uint32_t* m_k, int* clamped);
BT_API bt_status bt_ideal_m(double phi_hat_deg, double phi_deg, double* out);
BT_API bt_status bt_normalized_gain(double phi_hat_deg, double phi_deg, uint32_t m, double* out);
BT_API bt_status bt_closed_form_gain(double delta_cos, uint32_t m, double* out);
BT_API bt_status bt_noise_power_from_snr(double snr0_db, double alpha_re, double alpha_im, uint32_t m0,
                                         double* out);
BT_API bt_status bt_receive_snr(double alpha_re, double alpha_im, double n0, double phi_hat_deg, double phi_deg,
                                uint32_t m, double* out);

#ifdef __cplusplus
}
#endif

#endif /* BEAMTRACK_H */
