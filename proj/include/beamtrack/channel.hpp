// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The beamtrack Authors

// Ground-truth channel evolution and synthetic uplink pilot measurements.

#pragma once

#include "beamtrack/array.hpp"
#include "beamtrack/rng.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace beamtrack {

// Evolved angles are clamped to this band to stay clear of endfire.
inline const double kMinAngle = deg_to_rad(1.0);
inline const double kMaxAngle = deg_to_rad(179.0);

// LOS channel gain (real and imaginary part) and angle of arrival.
struct ChannelState {
    double alpha_re = 0.0;
    double alpha_im = 0.0;
    SteeringAngle phi{kPi / 2.0};

    cplx alpha() const { return {alpha_re, alpha_im}; }
};

// Per-slot standard deviations of the Gaussian random walk; sigma_phi in radians.
struct ProcessNoise {
    double sigma_alpha_re = 0.0;
    double sigma_alpha_im = 0.0;
    double sigma_phi = 0.0;

    // Throws std::invalid_argument on a negative or non-finite deviation.
    void validate() const;
};

// Unit-energy pilot row q.
class Pilot {
public:
    std::span<const cplx> samples() const& noexcept { return samples_; }
    std::span<const cplx> samples() && = delete;
    std::size_t size() const noexcept { return samples_.size(); }

private:
    friend Pilot make_pilot(std::size_t d);
    explicit Pilot(std::vector<cplx> s) : samples_(std::move(s)) {}
    std::vector<cplx> samples_;
};

// Combined pilot samples z plus the combiner that produced them.
struct Measurement {
    std::vector<cplx> samples;
    SteeringAngle phi_hat_used{kPi / 2.0};
    std::size_t m_used = 1;
};

struct NlosPath {
    cplx gain;
    SteeringAngle phi;
};

// x + u, u ~ N(0, diag(sigma^2)); phi clamped to [1 deg, 179 deg].
// Always consumes three normal draws, in the order re, im, phi.
ChannelState evolve_state(const ChannelState& x, const ProcessNoise& noise, RandomSource& rng);

// Constant pilot q[i] = 1/sqrt(d). Throws std::invalid_argument for d = 0.
Pilot make_pilot(std::size_t d);

// z = w^H h q + w^H N with w = a(phi_hat_prev, m_prev), h the LOS term plus
// any NLOS terms, and N an m_prev x D matrix of CN(0, n0) entries. No noise
// is drawn when n0 == 0.
Measurement synthesize_measurement(const ChannelState& x, SteeringAngle phi_hat_prev, std::size_t m_prev,
                                   const Pilot& pilot, double n0, std::span<const NlosPath> nlos_paths,
                                   RandomSource& rng);

} // namespace beamtrack
