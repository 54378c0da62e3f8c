// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The beamtrack Authors

// Episode loop (track, then pick the beamwidth), Monte Carlo aggregation and
// the derived statistics reported by the CLI.

#pragma once

#include "beamtrack/beamwidth.hpp"
#include "beamtrack/channel.hpp"
#include "beamtrack/tracker.hpp"

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace beamtrack {

enum class Mode { adaptive, fixed };

std::string_view to_string(Mode mode);

// Defaults reproduce the reference scenario: 64 antennas, D = 5 pilot
// samples, S = 1000 particles, alpha0 = (1+j)/sqrt(2), phi0 = 90 deg,
// sigma_alpha = 0.1, sigma_phi = 1 deg, 20 dB initial SNR.
struct SimConfig {
    std::size_t m0 = 64;
    std::size_t s = 1000;
    std::size_t d = 5;
    std::size_t k_steps = 100;
    std::size_t runs = 1000;
    ChannelState x0{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), SteeringAngle(kPi / 2.0)};
    ProcessNoise process_noise{0.1, 0.1, kPi / 180.0};
    double snr0_db = 20.0;
    std::uint64_t seed = 1;
    Mode mode = Mode::adaptive;
    // When false, measurements are synthesized noiselessly; the filter still
    // weights particles with the nominal noise power.
    bool measurement_noise = true;
    // Worker threads for run_monte_carlo; 0 picks hardware concurrency.
    unsigned threads = 0;

    // Throws ConfigError on an invalid parameter.
    void validate() const;
};

struct TraceRow {
    std::size_t k = 0;
    double phi_true = 0.0; // rad
    double phi_hat = 0.0;  // rad
    double e_k = 0.0;      // rad
    std::size_t m_k = 0;
    double snr = 0.0;      // linear
    double abs_err = 0.0;  // rad
};

struct EpisodeTrace {
    std::vector<TraceRow> rows;
    // Slots where weight normalization fell back to uniform weights.
    std::size_t degenerate_steps = 0;
};

struct AggregateMetrics {
    std::vector<double> rmse_per_step;     // rad
    std::vector<double> mean_m_per_step;
    std::vector<double> mean_snr_per_step; // linear
    // NaN when the pooled data has zero variance.
    double pearson_e_vs_abs_err = 0.0;

    // Arithmetic mean of rmse_per_step.
    double time_averaged_rmse() const;
};

struct MonteCarloResult {
    AggregateMetrics metrics;
    std::vector<EpisodeTrace> traces; // indexed by run
};

// N0 = m0 |alpha0|^2 / 10^(snr0_db / 10): the noise power giving snr0_db at
// full-array alignment.
double noise_power_from_snr(double snr0_db, cplx alpha0, std::size_t m0);

RandomSource episode_rng(const SimConfig& cfg, std::size_t run_index);

EpisodeTrace run_episode(const SimConfig& cfg, RandomSource& rng);

// Runs cfg.runs episodes (in parallel), episode i seeded by episode_rng(cfg, i).
// The result does not depend on the thread count.
MonteCarloResult run_monte_carlo(const SimConfig& cfg);

AggregateMetrics aggregate(std::span<const EpisodeTrace> traces);

// Pearson correlation. Throws DegenerateStatistics for fewer than two points
// or zero variance in either coordinate.
double pearson(std::span<const double> x, std::span<const double> y);

// Pooled correlation of (e_k, |phi_k - phi_hat_k|) across every trace row.
double correlation(std::span<const EpisodeTrace> traces);

// Mean m_k over equal-count groups of pooled rows ordered by e_k.
std::vector<double> mean_m_by_error_quantile(std::span<const EpisodeTrace> traces, std::size_t groups);

} // namespace beamtrack
