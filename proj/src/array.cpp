// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The beamtrack Authors

#include "beamtrack/array.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace beamtrack {

namespace {

void require_elements(std::size_t m) {
    if (m == 0) throw std::invalid_argument("array element count must be at least 1");
}

} // namespace

double deg_to_rad(double deg) { return deg * kPi / 180.0; }
double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

SteeringAngle::SteeringAngle(double radians) : value_(radians) {
    if (!std::isfinite(radians) || radians < 0.0 || radians > kPi)
        throw std::invalid_argument("steering angle outside [0, pi]: " + std::to_string(radians));
}

SteeringAngle SteeringAngle::from_degrees(double degrees) { return SteeringAngle(deg_to_rad(degrees)); }

SteeringVector steering_vector(SteeringAngle phi, std::size_t m) {
    require_elements(m);
    const double c = std::cos(phi.radians());
    std::vector<cplx> e(m);
    e[0] = cplx(1.0, 0.0);
    for (std::size_t n = 1; n < m; ++n) e[n] = std::polar(1.0, kPi * static_cast<double>(n) * c);
    return SteeringVector(std::move(e));
}

std::vector<cplx> combine(const SteeringVector& w, const ComplexMatrix& samples) {
    if (w.size() != samples.rows())
        throw std::invalid_argument("combiner length " + std::to_string(w.size()) +
                                    " does not match sample rows " + std::to_string(samples.rows()));
    std::vector<cplx> out(samples.cols(), cplx{});
    for (std::size_t r = 0; r < samples.rows(); ++r) {
        const cplx wc = std::conj(w[r]);
        for (std::size_t c = 0; c < samples.cols(); ++c) out[c] += wc * samples(r, c);
    }
    return out;
}

cplx array_response(SteeringAngle phi_hat, SteeringAngle phi, std::size_t m) {
    require_elements(m);
    // Each term is conj(e^{j pi n cos phi_hat}) e^{j pi n cos phi}; advance by
    // a unit phasor rotation instead of calling polar() per element.
    const double omega = kPi * (std::cos(phi.radians()) - std::cos(phi_hat.radians()));
    const cplx step = std::polar(1.0, omega);
    cplx term(1.0, 0.0);
    cplx sum(0.0, 0.0);
    for (std::size_t n = 0; n < m; ++n) {
        sum += term;
        term *= step;
    }
    return sum;
}

double normalized_gain(SteeringAngle phi_hat, SteeringAngle phi, std::size_t m) {
    return std::abs(array_response(phi_hat, phi, m)) / std::sqrt(static_cast<double>(m));
}

double closed_form_gain(double delta_cos, std::size_t m) {
    require_elements(m);
    const double md = static_cast<double>(m);
    // |sin(m x) / sin(x)| has period pi in x = pi D / 2, so fold D into
    // [-1, 1]; this keeps the zeros at D = +-2 as accurate as the one at 0.
    const double folded = delta_cos - 2.0 * std::round(delta_cos / 2.0);
    const double x = kPi * folded / 2.0;
    double ratio;
    if (std::abs(x) < 1e-6) {
        ratio = md * (1.0 - (md * md - 1.0) * x * x / 6.0);
    } else {
        ratio = std::sin(md * x) / std::sin(x);
    }
    return std::abs(ratio) / std::sqrt(md);
}

double receive_snr(cplx alpha, double n0, SteeringAngle phi_hat, SteeringAngle phi, std::size_t m) {
    if (!(n0 > 0.0)) throw std::invalid_argument("noise power must be positive");
    const double g = normalized_gain(phi_hat, phi, m);
    return std::norm(alpha) / n0 * g * g;
}

} // namespace beamtrack
