// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The beamtrack Authors

// Active-antenna-count selection: the SNR-maximizing M for a given pointing
// error, and the two-sided rule driven by the tracker's e_k.

#pragma once

#include "beamtrack/array.hpp"

#include <cstddef>

namespace beamtrack {

// First positive root of tan x = 2x (stationary point of the array gain in M).
struct RootConstant {
    double x_star = 0.0;
};

struct BeamDecision {
    std::size_t m_k = 1;
    // True when the rule asked for more than m0 antennas or its input was degenerate.
    bool clamped = false;
};

// Newton-Raphson on tan x - 2x from x = 1.2 until |f| < 1e-12.
// Throws NumericError if an iterate leaves (0, pi/2).
RootConstant solve_root();

// solve_root(), computed once.
double root_constant();

// 2 x* / (pi |cos phi_hat - cos phi|). Throws DegenerateStatistics when the
// cosine gap is below 1e-12.
double ideal_m(SteeringAngle phi_hat, SteeringAngle phi);

// Sum of the one-sided optima at phi_hat + e_k and phi_hat - e_k, rounded half
// away from zero and clamped to [1, m0]. Zero error and vanishing gaps give m0.
BeamDecision select_beamwidth(SteeringAngle phi_hat, double e_k, std::size_t m0);

} // namespace beamtrack
