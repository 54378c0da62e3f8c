// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The beamtrack Authors

#include "beamtrack/array.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

using namespace beamtrack;

namespace {

// Independent direct-sum oracle: |sum_n exp(-j pi n delta)| / sqrt(m), one
// polar() per term (no phasor recursion, no folding, no series).
double direct_gain(double delta_cos, std::size_t m) {
    cplx sum{};
    for (std::size_t n = 0; n < m; ++n) sum += std::polar(1.0, -kPi * static_cast<double>(n) * delta_cos);
    return std::abs(sum) / std::sqrt(static_cast<double>(m));
}

} // namespace

TEST_CASE("steering angle rejects values outside [0, pi]") {
    CHECK_THROWS_AS(SteeringAngle(-1e-9), std::invalid_argument);
    CHECK_THROWS_AS(SteeringAngle(kPi + 1e-9), std::invalid_argument);
    CHECK_THROWS_AS(SteeringAngle(std::nan("")), std::invalid_argument);
    CHECK(SteeringAngle::from_degrees(90.0).radians() == doctest::Approx(kPi / 2));
}

TEST_CASE("steering vector examples") {
    const auto broadside = steering_vector(SteeringAngle::from_degrees(90.0), 4);
    for (const auto& e : broadside.entries()) {
        CHECK(e.real() == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(std::abs(e.imag()) < 1e-15);
    }

    const auto sixty = steering_vector(SteeringAngle::from_degrees(60.0), 4);
    const cplx expected[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(sixty[i] - expected[i]) < 1e-12);

    const auto single = steering_vector(SteeringAngle(0.3), 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == cplx(1.0, 0.0));

    CHECK_THROWS_AS(steering_vector(SteeringAngle(0.3), 0), std::invalid_argument);
}

TEST_CASE("steering vector entries are unit modulus with exact leading one") {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> ang(0.0, kPi);
    for (int t = 0; t < 200; ++t) {
        const auto v = steering_vector(SteeringAngle(ang(gen)), 1 + t % 128);
        CHECK(v[0] == cplx(1.0, 0.0));
        for (const auto& e : v.entries()) CHECK(std::abs(std::abs(e) - 1.0) < 1e-12);
    }
}

TEST_CASE("combine applies the conjugate transpose") {
    const auto id = steering_vector(SteeringAngle(1.0), 1);
    ComplexMatrix one(1, 2);
    one(0, 0) = {5.0, 0.0};
    const auto out1 = combine(id, one);
    CHECK(out1[0] == cplx(5.0, 0.0));
    CHECK(out1[1] == cplx(0.0, 0.0));

    // w = a(phi, M), samples = a(phi, M) q  ->  M q
    const SteeringAngle phi(1.1);
    const auto a = steering_vector(phi, 16);
    ComplexMatrix block(16, 3);
    const cplx q[] = {{0.5, 0.0}, {0.0, -0.5}, {0.25, 0.25}};
    for (std::size_t r = 0; r < 16; ++r)
        for (std::size_t c = 0; c < 3; ++c) block(r, c) = a[r] * q[c];
    const auto out = combine(a, block);
    for (std::size_t c = 0; c < 3; ++c) CHECK(std::abs(out[c] - 16.0 * q[c]) < 1e-12);

    CHECK_THROWS_AS(combine(a, ComplexMatrix(3, 1)), std::invalid_argument);
}

TEST_CASE("combine conjugates the weights") {
    // Steering vectors start at 1, so [j, j] is not representable; the
    // conjugation shows up through a non-real second entry instead.
    const auto w = steering_vector(SteeringAngle::from_degrees(90.0), 2);
    ComplexMatrix s(2, 1);
    s(0, 0) = {0.0, -1.0};
    s(1, 0) = {0.0, -1.0};
    CHECK(std::abs(combine(w, s)[0] - cplx(0.0, -2.0)) < 1e-15);

    // Non-real weights: w = [1, j] at 60 deg; w^H [1, j]^T = 1 + (-j)(j) = 2.
    const auto w60 = steering_vector(SteeringAngle::from_degrees(60.0), 2);
    ComplexMatrix s2(2, 1);
    s2(0, 0) = {1.0, 0.0};
    s2(1, 0) = {0.0, 1.0};
    CHECK(std::abs(combine(w60, s2)[0] - cplx(2.0, 0.0)) < 1e-12);
}

TEST_CASE("normalized gain examples") {
    const SteeringAngle phi(1.234);
    CHECK(normalized_gain(phi, phi, 64) == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(normalized_gain(SteeringAngle::from_degrees(90.0), SteeringAngle::from_degrees(60.0), 2) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("normalized gain properties") {
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> ang(0.0, kPi);
    for (int t = 0; t < 500; ++t) {
        const SteeringAngle a(ang(gen)), b(ang(gen));
        const std::size_t m = 1 + t % 128;
        const double g = normalized_gain(a, b, m);
        CHECK(g >= 0.0);
        CHECK(g <= std::sqrt(static_cast<double>(m)) + 1e-12);
        CHECK(std::abs(g - normalized_gain(b, a, m)) < 1e-12);
        CHECK(std::abs(normalized_gain(a, a, m) - std::sqrt(static_cast<double>(m))) < 1e-12);
    }
}

TEST_CASE("closed form gain limits") {
    CHECK(closed_form_gain(0.0, 64) == doctest::Approx(8.0).epsilon(1e-15));
    for (double d : {-2.0, -1.3, -0.2, 0.0, 0.7, 2.0}) CHECK(closed_form_gain(d, 1) == doctest::Approx(1.0));
    for (std::size_t m = 1; m <= 65; ++m) {
        const double root_m = std::sqrt(static_cast<double>(m));
        CHECK(closed_form_gain(2.0, m) == doctest::Approx(root_m).epsilon(1e-12));
        CHECK(closed_form_gain(-2.0, m) == doctest::Approx(root_m).epsilon(1e-12));
        CHECK(closed_form_gain(1e-13, m) == doctest::Approx(root_m).epsilon(1e-12));
    }
}

TEST_CASE("closed form equals the direct sum on a dense grid") {
    double worst = 0.0;
    for (std::size_t m = 1; m <= 128; ++m) {
        for (int i = -1999; i <= 1999; ++i) {
            const double delta = i * 1e-3;
            worst = std::max(worst, std::abs(closed_form_gain(delta, m) - direct_gain(delta, m)));
        }
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("normalized gain matches closed form for random geometries") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> ang(0.0, kPi);
    for (int t = 0; t < 2000; ++t) {
        const SteeringAngle a(ang(gen)), b(ang(gen));
        const std::size_t m = 1 + t % 64;
        const double delta = std::cos(a.radians()) - std::cos(b.radians());
        CHECK(std::abs(normalized_gain(a, b, m) - closed_form_gain(delta, m)) < 1e-9);
    }
}

TEST_CASE("receive SNR") {
    const cplx alpha = cplx(1.0, 1.0) / std::sqrt(2.0);
    const SteeringAngle phi = SteeringAngle::from_degrees(90.0);
    CHECK(receive_snr(alpha, 0.64, phi, phi, 64) == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(receive_snr(cplx{}, 0.64, phi, phi, 64) == 0.0);
    CHECK(receive_snr(cplx(0.0, 2.0), 4.0, phi, phi, 1) == doctest::Approx(1.0));
    CHECK_THROWS_AS(receive_snr(alpha, 0.0, phi, phi, 4), std::invalid_argument);
    CHECK_THROWS_AS(receive_snr(alpha, -1.0, phi, phi, 4), std::invalid_argument);
}
