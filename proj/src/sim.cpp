// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The beamtrack Authors

#include "beamtrack/sim.hpp"

#include "beamtrack/error.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace beamtrack {

std::string_view to_string(Mode mode) { return mode == Mode::adaptive ? "adaptive" : "fixed"; }

void SimConfig::validate() const {
    if (m0 < 1) throw ConfigError("m0 must be >= 1");
    if (s < 1) throw ConfigError("s must be >= 1");
    if (d < 1) throw ConfigError("d must be >= 1");
    if (k_steps < 1) throw ConfigError("k_steps must be >= 1");
    if (runs < 1) throw ConfigError("runs must be >= 1");
    if (!std::isfinite(snr0_db)) throw ConfigError("snr0_db must be finite");
    if (!std::isfinite(x0.alpha_re) || !std::isfinite(x0.alpha_im)) throw ConfigError("alpha0 must be finite");
    if (x0.phi.radians() < kMinAngle || x0.phi.radians() > kMaxAngle)
        throw ConfigError("phi0 must lie in [1, 179] degrees");
    if (std::norm(x0.alpha()) <= 0.0) throw ConfigError("alpha0 must be nonzero");
    try {
        process_noise.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

double AggregateMetrics::time_averaged_rmse() const {
    if (rmse_per_step.empty()) return 0.0;
    return std::accumulate(rmse_per_step.begin(), rmse_per_step.end(), 0.0) /
           static_cast<double>(rmse_per_step.size());
}

double noise_power_from_snr(double snr0_db, cplx alpha0, std::size_t m0) {
    if (m0 == 0) throw std::invalid_argument("m0 must be at least 1");
    return static_cast<double>(m0) * std::norm(alpha0) / std::pow(10.0, snr0_db / 10.0);
}

RandomSource episode_rng(const SimConfig& cfg, std::size_t run_index) {
    return RandomSource::for_stream(cfg.seed, run_index);
}

EpisodeTrace run_episode(const SimConfig& cfg, RandomSource& rng) {
    cfg.validate();
    const double n0 = noise_power_from_snr(cfg.snr0_db, cfg.x0.alpha(), cfg.m0);
    const double n0_synth = cfg.measurement_noise ? n0 : 0.0;
    const Pilot pilot = make_pilot(cfg.d);

    ChannelState truth = cfg.x0;
    ParticleSet particles = init_particles(cfg.x0, cfg.s, cfg.process_noise, rng);
    SteeringAngle phi_hat = cfg.x0.phi;
    std::size_t m_active = cfg.m0;

    EpisodeTrace trace;
    trace.rows.reserve(cfg.k_steps);
    for (std::size_t k = 1; k <= cfg.k_steps; ++k) {
        truth = evolve_state(truth, cfg.process_noise, rng);
        const Measurement z = synthesize_measurement(truth, phi_hat, m_active, pilot, n0_synth, {}, rng);
        StepResult step = track_step(std::move(particles), z, pilot, n0, cfg.process_noise, rng);
        particles = std::move(step.particles);
        if (particles.degenerate()) ++trace.degenerate_steps;

        phi_hat = step.estimate.state_hat.phi;
        const double e_k = step.estimate.aoa_rmse;
        m_active = cfg.mode == Mode::adaptive ? select_beamwidth(phi_hat, e_k, cfg.m0).m_k : cfg.m0;

        TraceRow row;
        row.k = k;
        row.phi_true = truth.phi.radians();
        row.phi_hat = phi_hat.radians();
        row.e_k = e_k;
        row.m_k = m_active;
        row.snr = receive_snr(truth.alpha(), n0, phi_hat, truth.phi, m_active);
        row.abs_err = std::abs(row.phi_true - row.phi_hat);
        trace.rows.push_back(row);
    }
    return trace;
}

MonteCarloResult run_monte_carlo(const SimConfig& cfg) {
    cfg.validate();
    MonteCarloResult result;
    result.traces.resize(cfg.runs);

    unsigned workers = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, cfg.runs));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < cfg.runs; i = next++) {
            try {
                RandomSource rng = episode_rng(cfg, i);
                result.traces[i] = run_episode(cfg, rng);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    result.metrics = aggregate(result.traces);
    return result;
}

AggregateMetrics aggregate(std::span<const EpisodeTrace> traces) {
    if (traces.empty()) throw std::invalid_argument("no traces to aggregate");
    const std::size_t steps = traces.front().rows.size();
    for (const auto& t : traces)
        if (t.rows.size() != steps) throw std::invalid_argument("traces differ in length");

    AggregateMetrics m;
    m.rmse_per_step.assign(steps, 0.0);
    m.mean_m_per_step.assign(steps, 0.0);
    m.mean_snr_per_step.assign(steps, 0.0);
    // Summed in run order so the result is independent of scheduling.
    for (const auto& t : traces)
        for (std::size_t k = 0; k < steps; ++k) {
            const auto& r = t.rows[k];
            m.rmse_per_step[k] += r.abs_err * r.abs_err;
            m.mean_m_per_step[k] += static_cast<double>(r.m_k);
            m.mean_snr_per_step[k] += r.snr;
        }
    const double n = static_cast<double>(traces.size());
    for (std::size_t k = 0; k < steps; ++k) {
        m.rmse_per_step[k] = std::sqrt(m.rmse_per_step[k] / n);
        m.mean_m_per_step[k] /= n;
        m.mean_snr_per_step[k] /= n;
    }
    try {
        m.pearson_e_vs_abs_err = correlation(traces);
    } catch (const DegenerateStatistics&) {
        m.pearson_e_vs_abs_err = std::numeric_limits<double>::quiet_NaN();
    }
    return m;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("pearson: length mismatch");
    const std::size_t n = x.size();
    if (n < 2) throw DegenerateStatistics("pearson: need at least two points");
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (!(sxx > 0.0) || !(syy > 0.0)) throw DegenerateStatistics("pearson: zero variance");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double correlation(std::span<const EpisodeTrace> traces) {
    std::vector<double> e, err;
    for (const auto& t : traces)
        for (const auto& r : t.rows) {
            e.push_back(r.e_k);
            err.push_back(r.abs_err);
        }
    return pearson(e, err);
}

std::vector<double> mean_m_by_error_quantile(std::span<const EpisodeTrace> traces, std::size_t groups) {
    if (groups == 0) throw std::invalid_argument("groups must be >= 1");
    std::vector<std::pair<double, double>> pooled;
    for (const auto& t : traces)
        for (const auto& r : t.rows) pooled.emplace_back(r.e_k, static_cast<double>(r.m_k));
    if (pooled.size() < groups) throw DegenerateStatistics("fewer rows than groups");
    std::stable_sort(pooled.begin(), pooled.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<double> means(groups, 0.0);
    const std::size_t n = pooled.size();
    for (std::size_t g = 0; g < groups; ++g) {
        const std::size_t lo = g * n / groups;
        const std::size_t hi = (g + 1) * n / groups;
        double sum = 0.0;
        for (std::size_t i = lo; i < hi; ++i) sum += pooled[i].second;
        means[g] = sum / static_cast<double>(hi - lo);
    }
    return means;
}

} // namespace beamtrack
