// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The beamtrack Authors

#pragma once

#include <stdexcept>
#include <string>

namespace beamtrack {

// Statistic undefined for the input (zero variance, too few points).
class DegenerateStatistics : public std::domain_error {
public:
    explicit DegenerateStatistics(const std::string& what) : std::domain_error(what) {}
};

// Iterative solver left its admissible interval or failed to converge.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed config file, unknown key or out-of-range parameter.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace beamtrack
