// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The beamtrack Authors

// Particle filter over the channel state (alpha_re, alpha_im, phi) with the
// posterior AoA spread used as the tracker's own error estimate.

#pragma once

#include "beamtrack/channel.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace beamtrack {

struct Particle {
    ChannelState state;
    double weight = 0.0;
};

// Owned by a single episode. Operations below take the set by value and
// hand back the replacement, so callers move it through each stage.
class ParticleSet {
public:
    ParticleSet() = default;
    explicit ParticleSet(std::vector<Particle> particles) : particles_(std::move(particles)) {}

    std::size_t size() const noexcept { return particles_.size(); }
    std::span<const Particle> particles() const& noexcept { return particles_; }
    std::span<Particle> particles() & noexcept { return particles_; }
    // A view into a temporary set would dangle.
    std::span<const Particle> particles() && = delete;
    const Particle& operator[](std::size_t i) const { return particles_[i]; }
    Particle& operator[](std::size_t i) { return particles_[i]; }

    double weight_sum() const;

    // Set by weight_update when the posterior could not be normalized and
    // the weights were reset to uniform.
    bool degenerate() const noexcept { return degenerate_; }
    void set_degenerate(bool d) noexcept { degenerate_ = d; }

private:
    std::vector<Particle> particles_;
    bool degenerate_ = false;
};

struct TrackerEstimate {
    ChannelState state_hat;
    double aoa_rmse = 0.0; // e_k, radians
};

struct StepResult {
    ParticleSet particles;
    TrackerEstimate estimate;
};

// s draws from N(x0, diag(spread^2)) with weights 1/s. Throws for s = 0.
ParticleSet init_particles(const ChannelState& x0, std::size_t s, const ProcessNoise& spread, RandomSource& rng);

// Random-walk prediction of every particle; weights untouched.
ParticleSet propagate(ParticleSet ps, const ProcessNoise& noise, RandomSource& rng);

// -sum_d |z_d - zhat_d|^2 / (n0 m), zhat_d = alpha a(phi_hat_used)^H a(phi) q_d.
double log_likelihood(const ChannelState& particle_state, const Measurement& z, const Pilot& pilot, double n0);

// Multiplies each weight by its likelihood in the log domain and normalizes.
ParticleSet weight_update(ParticleSet ps, const Measurement& z, const Pilot& pilot, double n0);

// Systematic resampling with a single uniform offset; output weights are 1/S.
ParticleSet resample(const ParticleSet& ps, RandomSource& rng);

// Weighted mean state and weighted RMS deviation of phi about its mean.
TrackerEstimate estimate(const ParticleSet& ps);

// propagate -> weight_update -> estimate -> resample.
StepResult track_step(ParticleSet ps, const Measurement& z, const Pilot& pilot, double n0,
                      const ProcessNoise& noise, RandomSource& rng);

} // namespace beamtrack
