// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The beamtrack Authors

#pragma once

#include <cstdint>
#include <random>

namespace beamtrack {

// Seeded random source owned by exactly one episode (or test).
// Not thread safe; give each concurrent caller its own instance.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    // Independent stream for `index` under a master seed. Streams for
    // different indices are decorrelated through splitmix64, so episode i
    // can be replayed alone.
    static RandomSource for_stream(std::uint64_t master_seed, std::uint64_t index);

    double gaussian() { return normal_(engine_); }
    // Uniform on [0, 1).
    double uniform() { return uniform_(engine_); }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

std::uint64_t splitmix64(std::uint64_t x);

} // namespace beamtrack
