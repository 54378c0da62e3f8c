// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The beamtrack Authors

// Flat `key = value` experiment files. Angles are degrees here and radians
// everywhere past this boundary.
//
// Keys: m0 s d k_steps runs seed alpha0_re alpha0_im phi0_deg sigma_alpha
//       sigma_phi_deg snr0_db mode measurement_noise
// Blank lines and text after '#' are ignored. Unknown keys are rejected.

#pragma once

#include "beamtrack/sim.hpp"

#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <string_view>

namespace beamtrack {

std::span<const std::string_view> config_keys();

// Throws ConfigError for an unknown key or an unparsable value. Range checks
// are left to SimConfig::validate so that overrides may be applied in any order.
void apply_setting(SimConfig& cfg, std::string_view key, std::string_view value);

// Parses "key=value" (as given to --set).
void apply_assignment(SimConfig& cfg, std::string_view assignment);

// Starts from the defaults and applies every line of `in`.
SimConfig parse_config(std::istream& in);
SimConfig load_config(const std::filesystem::path& path);

// Renders every key. Parsing the text back reproduces cfg up to the
// degree/radian conversion of the angle keys.
std::string format_config(const SimConfig& cfg);

} // namespace beamtrack
