// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The beamtrack Authors

#include "beamtrack/config.hpp"

#include "beamtrack/error.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace beamtrack {

namespace {

constexpr std::array<std::string_view, 14> kKeys = {
    "m0",       "s",           "d",           "k_steps",       "runs",    "seed", "alpha0_re",
    "alpha0_im", "phi0_deg",   "sigma_alpha", "sigma_phi_deg", "snr0_db", "mode", "measurement_noise"};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
    throw ConfigError("invalid value '" + std::string(value) + "' for key '" + std::string(key) + "'");
}

double parse_double(std::string_view key, std::string_view value) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size() || value.empty()) bad_value(key, value);
    return out;
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view value) {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size() || value.empty()) bad_value(key, value);
    return out;
}

SteeringAngle parse_angle_deg(std::string_view key, std::string_view value) {
    try {
        return SteeringAngle::from_degrees(parse_double(key, value));
    } catch (const std::invalid_argument&) {
        throw ConfigError("angle for '" + std::string(key) + "' outside [0, 180] degrees");
    }
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::span<const std::string_view> config_keys() { return kKeys; }

void apply_setting(SimConfig& cfg, std::string_view key, std::string_view value) {
    value = trim(value);
    if (key == "m0") cfg.m0 = parse_unsigned(key, value);
    else if (key == "s") cfg.s = parse_unsigned(key, value);
    else if (key == "d") cfg.d = parse_unsigned(key, value);
    else if (key == "k_steps") cfg.k_steps = parse_unsigned(key, value);
    else if (key == "runs") cfg.runs = parse_unsigned(key, value);
    else if (key == "seed") cfg.seed = parse_unsigned(key, value);
    else if (key == "alpha0_re") cfg.x0.alpha_re = parse_double(key, value);
    else if (key == "alpha0_im") cfg.x0.alpha_im = parse_double(key, value);
    else if (key == "phi0_deg") cfg.x0.phi = parse_angle_deg(key, value);
    else if (key == "sigma_alpha") {
        const double s = parse_double(key, value);
        cfg.process_noise.sigma_alpha_re = s;
        cfg.process_noise.sigma_alpha_im = s;
    } else if (key == "sigma_phi_deg") cfg.process_noise.sigma_phi = deg_to_rad(parse_double(key, value));
    else if (key == "snr0_db") cfg.snr0_db = parse_double(key, value);
    else if (key == "mode") {
        if (value == "adaptive") cfg.mode = Mode::adaptive;
        else if (value == "fixed") cfg.mode = Mode::fixed;
        else bad_value(key, value);
    } else if (key == "measurement_noise") {
        if (value == "true" || value == "1") cfg.measurement_noise = true;
        else if (value == "false" || value == "0") cfg.measurement_noise = false;
        else bad_value(key, value);
    } else {
        throw ConfigError("unknown config key '" + std::string(key) + "'");
    }
}

void apply_assignment(SimConfig& cfg, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected key=value, got '" + std::string(assignment) + "'");
    apply_setting(cfg, trim(assignment.substr(0, eq)), assignment.substr(eq + 1));
}

SimConfig parse_config(std::istream& in) {
    SimConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view(line);
        if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        view = trim(view);
        if (view.empty()) continue;
        try {
            apply_assignment(cfg, view);
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return cfg;
}

SimConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    return parse_config(in);
}

std::string format_config(const SimConfig& cfg) {
    std::ostringstream out;
    out << "m0 = " << cfg.m0 << '\n'
        << "s = " << cfg.s << '\n'
        << "d = " << cfg.d << '\n'
        << "k_steps = " << cfg.k_steps << '\n'
        << "runs = " << cfg.runs << '\n'
        << "seed = " << cfg.seed << '\n'
        << "alpha0_re = " << fmt_double(cfg.x0.alpha_re) << '\n'
        << "alpha0_im = " << fmt_double(cfg.x0.alpha_im) << '\n'
        << "phi0_deg = " << fmt_double(cfg.x0.phi.degrees()) << '\n'
        << "sigma_alpha = " << fmt_double(cfg.process_noise.sigma_alpha_re) << '\n'
        << "sigma_phi_deg = " << fmt_double(rad_to_deg(cfg.process_noise.sigma_phi)) << '\n'
        << "snr0_db = " << fmt_double(cfg.snr0_db) << '\n'
        << "mode = " << to_string(cfg.mode) << '\n'
        << "measurement_noise = " << (cfg.measurement_noise ? "true" : "false") << '\n';
    return out.str();
}

} // namespace beamtrack
