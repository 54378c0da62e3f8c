// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The beamtrack Authors

// Half-wavelength uniform linear array: steering vectors, analog combining,
// array-factor gain and post-combining SNR.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace beamtrack {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

double deg_to_rad(double deg);
double rad_to_deg(double rad);

// Angle of arrival measured from the array axis, in radians.
class SteeringAngle {
public:
    // Throws std::invalid_argument outside [0, pi] or for non-finite input.
    explicit SteeringAngle(double radians);
    static SteeringAngle from_degrees(double degrees);

    double radians() const noexcept { return value_; }
    double degrees() const noexcept { return rad_to_deg(value_); }

    friend bool operator==(const SteeringAngle&, const SteeringAngle&) = default;

private:
    double value_;
};

// Unit-modulus phase response a(phi, M); entry 0 is exactly 1.
class SteeringVector {
public:
    std::span<const cplx> entries() const& noexcept { return entries_; }
    std::span<const cplx> entries() && = delete;
    std::size_t size() const noexcept { return entries_.size(); }
    const cplx& operator[](std::size_t i) const { return entries_[i]; }

private:
    friend SteeringVector steering_vector(SteeringAngle phi, std::size_t m);
    explicit SteeringVector(std::vector<cplx> e) : entries_(std::move(e)) {}
    std::vector<cplx> entries_;
};

// Dense row-major complex matrix, just enough for M x D pilot blocks.
class ComplexMatrix {
public:
    ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<cplx> data_;
};

SteeringVector steering_vector(SteeringAngle phi, std::size_t m);

// w^H * samples. Throws std::invalid_argument on a row-count mismatch.
std::vector<cplx> combine(const SteeringVector& w, const ComplexMatrix& samples);

// a(phi_hat, m)^H a(phi, m), summed term by term.
cplx array_response(SteeringAngle phi_hat, SteeringAngle phi, std::size_t m);

// |a(phi_hat, m)^H a(phi, m)| / sqrt(m), the quantity the beamwidth rule maximizes.
double normalized_gain(SteeringAngle phi_hat, SteeringAngle phi, std::size_t m);

// Dirichlet-kernel form |sin(pi m D / 2) / (sqrt(m) sin(pi D / 2))| with
// D = cos(phi_hat) - cos(phi). Returns the limit sqrt(m) at D = 0, +-2.
double closed_form_gain(double delta_cos, std::size_t m);

// (|alpha|^2 / n0) * normalized_gain^2. Throws std::invalid_argument if n0 <= 0.
double receive_snr(cplx alpha, double n0, SteeringAngle phi_hat, SteeringAngle phi, std::size_t m);

} // namespace beamtrack
