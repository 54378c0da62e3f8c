// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The beamtrack Authors

#include "beamtrack/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace beamtrack {

double ParticleSet::weight_sum() const {
    double sum = 0.0;
    for (const auto& p : particles_) sum += p.weight;
    return sum;
}

ParticleSet init_particles(const ChannelState& x0, std::size_t s, const ProcessNoise& spread, RandomSource& rng) {
    if (s == 0) throw std::invalid_argument("particle count must be at least 1");
    spread.validate();
    std::vector<Particle> particles;
    particles.reserve(s);
    const double w = 1.0 / static_cast<double>(s);
    for (std::size_t i = 0; i < s; ++i) particles.push_back({evolve_state(x0, spread, rng), w});
    return ParticleSet(std::move(particles));
}

ParticleSet propagate(ParticleSet ps, const ProcessNoise& noise, RandomSource& rng) {
    noise.validate();
    for (auto& p : ps.particles()) p.state = evolve_state(p.state, noise, rng);
    return ps;
}

double log_likelihood(const ChannelState& particle_state, const Measurement& z, const Pilot& pilot, double n0) {
    if (!(n0 > 0.0)) throw std::invalid_argument("noise power must be positive");
    if (z.samples.size() != pilot.size()) throw std::invalid_argument("measurement and pilot lengths differ");
    const cplx signal = particle_state.alpha() * array_response(z.phi_hat_used, particle_state.phi, z.m_used);
    double residual = 0.0;
    for (std::size_t d = 0; d < pilot.size(); ++d) residual += std::norm(z.samples[d] - signal * pilot.samples()[d]);
    return -residual / (n0 * static_cast<double>(z.m_used));
}

ParticleSet weight_update(ParticleSet ps, const Measurement& z, const Pilot& pilot, double n0) {
    const std::size_t s = ps.size();
    if (s == 0) throw std::invalid_argument("empty particle set");

    std::vector<double> log_w(s);
    double max_log_w = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < s; ++i) {
        const double prior = ps[i].weight;
        log_w[i] = prior > 0.0 ? std::log(prior) + log_likelihood(ps[i].state, z, pilot, n0)
                               : -std::numeric_limits<double>::infinity();
        if (log_w[i] > max_log_w) max_log_w = log_w[i];
    }

    double total = 0.0;
    if (std::isfinite(max_log_w)) {
        for (std::size_t i = 0; i < s; ++i) {
            ps[i].weight = std::exp(log_w[i] - max_log_w);
            total += ps[i].weight;
        }
    }

    if (!(total > 0.0) || !std::isfinite(total)) {
        const double w = 1.0 / static_cast<double>(s);
        for (auto& p : ps.particles()) p.weight = w;
        ps.set_degenerate(true);
        return ps;
    }
    for (auto& p : ps.particles()) p.weight /= total;
    ps.set_degenerate(false);
    return ps;
}

ParticleSet resample(const ParticleSet& ps, RandomSource& rng) {
    const std::size_t s = ps.size();
    if (s == 0) throw std::invalid_argument("empty particle set");
    const double step = 1.0 / static_cast<double>(s);
    const double offset = rng.uniform() * step;

    std::vector<Particle> out;
    out.reserve(s);
    std::size_t src = 0;
    double cumulative = ps[0].weight;
    for (std::size_t i = 0; i < s; ++i) {
        const double u = offset + static_cast<double>(i) * step;
        while (u >= cumulative && src + 1 < s) cumulative += ps[++src].weight;
        out.push_back({ps[src].state, step});
    }
    return ParticleSet(std::move(out));
}

TrackerEstimate estimate(const ParticleSet& ps) {
    if (ps.size() == 0) throw std::invalid_argument("empty particle set");
    double re = 0.0, im = 0.0, phi = 0.0;
    for (const auto& p : ps.particles()) {
        re += p.weight * p.state.alpha_re;
        im += p.weight * p.state.alpha_im;
        phi += p.weight * p.state.phi.radians();
    }
    // A convex combination of in-range angles stays in range up to rounding.
    phi = std::clamp(phi, 0.0, kPi);

    double spread = 0.0;
    for (const auto& p : ps.particles()) {
        const double dev = p.state.phi.radians() - phi;
        spread += p.weight * dev * dev;
    }
    return {ChannelState{re, im, SteeringAngle(phi)}, std::sqrt(spread)};
}

StepResult track_step(ParticleSet ps, const Measurement& z, const Pilot& pilot, double n0,
                      const ProcessNoise& noise, RandomSource& rng) {
    ps = propagate(std::move(ps), noise, rng);
    ps = weight_update(std::move(ps), z, pilot, n0);
    const TrackerEstimate est = estimate(ps);
    const bool degenerate = ps.degenerate();
    ParticleSet next = resample(ps, rng);
    next.set_degenerate(degenerate);
    return {std::move(next), est};
}

} // namespace beamtrack
