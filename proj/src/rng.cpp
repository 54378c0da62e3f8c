// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The beamtrack Authors

#include "beamtrack/rng.hpp"

namespace beamtrack {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RandomSource RandomSource::for_stream(std::uint64_t master_seed, std::uint64_t index) {
    return RandomSource(splitmix64(splitmix64(master_seed) ^ index));
}

} // namespace beamtrack
