// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The beamtrack Authors

#include "beamtrack/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace beamtrack {

void ProcessNoise::validate() const {
    for (double s : {sigma_alpha_re, sigma_alpha_im, sigma_phi})
        if (!std::isfinite(s) || s < 0.0) throw std::invalid_argument("process noise deviations must be >= 0");
}

ChannelState evolve_state(const ChannelState& x, const ProcessNoise& noise, RandomSource& rng) {
    const double u_re = rng.gaussian();
    const double u_im = rng.gaussian();
    const double u_phi = rng.gaussian();
    ChannelState out = x;
    out.alpha_re += noise.sigma_alpha_re * u_re;
    out.alpha_im += noise.sigma_alpha_im * u_im;
    out.phi = SteeringAngle(std::clamp(x.phi.radians() + noise.sigma_phi * u_phi, kMinAngle, kMaxAngle));
    return out;
}

Pilot make_pilot(std::size_t d) {
    if (d == 0) throw std::invalid_argument("pilot length must be at least 1");
    return Pilot(std::vector<cplx>(d, cplx(1.0 / std::sqrt(static_cast<double>(d)), 0.0)));
}

Measurement synthesize_measurement(const ChannelState& x, SteeringAngle phi_hat_prev, std::size_t m_prev,
                                   const Pilot& pilot, double n0, std::span<const NlosPath> nlos_paths,
                                   RandomSource& rng) {
    if (!(n0 >= 0.0)) throw std::invalid_argument("noise power must be >= 0");
    if (m_prev == 0) throw std::invalid_argument("active antenna count must be at least 1");

    cplx wh = x.alpha() * array_response(phi_hat_prev, x.phi, m_prev);
    for (const auto& path : nlos_paths) wh += path.gain * array_response(phi_hat_prev, path.phi, m_prev);

    const std::size_t d = pilot.size();
    Measurement z;
    z.phi_hat_used = phi_hat_prev;
    z.m_used = m_prev;
    z.samples.resize(d);
    for (std::size_t i = 0; i < d; ++i) z.samples[i] = wh * pilot.samples()[i];

    if (n0 > 0.0) {
        // Each complex entry has variance n0, split evenly over I and Q.
        const double sd = std::sqrt(n0 / 2.0);
        ComplexMatrix noise(m_prev, d);
        for (std::size_t r = 0; r < m_prev; ++r)
            for (std::size_t c = 0; c < d; ++c) {
                const double re = rng.gaussian();
                const double im = rng.gaussian();
                noise(r, c) = cplx(sd * re, sd * im);
            }
        const auto combined = combine(steering_vector(phi_hat_prev, m_prev), noise);
        for (std::size_t i = 0; i < d; ++i) z.samples[i] += combined[i];
    }
    return z;
}

} // namespace beamtrack
