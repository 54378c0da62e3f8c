// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The beamtrack Authors

#include "beamtrack/beamwidth.hpp"

#include "beamtrack/error.hpp"

#include <cmath>
#include <stdexcept>

namespace beamtrack {

namespace {

constexpr double kGapFloor = 1e-12;
constexpr double kErrorFloor = 1e-9;

} // namespace

RootConstant solve_root() {
    double x = 1.2;
    for (int iter = 0; iter < 100; ++iter) {
        const double f = std::tan(x) - 2.0 * x;
        if (std::abs(f) < 1e-12) return {x};
        const double c = std::cos(x);
        const double df = 1.0 / (c * c) - 2.0;
        x -= f / df;
        if (!(x > 0.0 && x < kPi / 2.0)) throw NumericError("Newton iterate left (0, pi/2)");
    }
    throw NumericError("Newton iteration for tan x = 2x did not converge");
}

double root_constant() {
    static const double x_star = solve_root().x_star;
    return x_star;
}

double ideal_m(SteeringAngle phi_hat, SteeringAngle phi) {
    const double gap = std::abs(std::cos(phi_hat.radians()) - std::cos(phi.radians()));
    if (gap < kGapFloor) throw DegenerateStatistics("cosine gap too small for ideal_m");
    return 2.0 * root_constant() / (kPi * gap);
}

BeamDecision select_beamwidth(SteeringAngle phi_hat, double e_k, std::size_t m0) {
    if (m0 == 0) throw std::invalid_argument("m0 must be at least 1");
    if (!(e_k >= 0.0)) throw std::invalid_argument("e_k must be >= 0");
    const BeamDecision full{m0, true};
    if (e_k < kErrorFloor) return full;

    const double c = std::cos(phi_hat.radians());
    const double gap_up = std::abs(c - std::cos(phi_hat.radians() + e_k));
    const double gap_down = std::abs(c - std::cos(phi_hat.radians() - e_k));
    if (gap_up < kGapFloor || gap_down < kGapFloor) return full;

    const double k = root_constant() / kPi;
    const double m = std::round(k / gap_up + k / gap_down);
    if (!std::isfinite(m) || m > static_cast<double>(m0)) return full;
    if (m < 1.0) return {1, false};
    return {static_cast<std::size_t>(m), false};
}

} // namespace beamtrack
