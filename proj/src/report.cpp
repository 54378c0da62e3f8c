// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The beamtrack Authors

#include "beamtrack/report.hpp"

#include "beamtrack/config.hpp"
#include "beamtrack/error.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace beamtrack {

namespace {

std::string f6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

double to_db(double linear) { return 10.0 * std::log10(linear); }

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<std::vector<double>> parse_table(std::string_view text, std::string_view header, std::size_t cols) {
    auto lines = split(text, '\n');
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty() || lines.front() != header) throw std::invalid_argument("unexpected CSV header");
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split(lines[i], ',');
        if (fields.size() != cols) throw std::invalid_argument("wrong field count on CSV line " + std::to_string(i + 1));
        std::vector<double> row;
        for (auto f : fields) {
            // strtod accepts "inf"/"-inf"/"nan" as printed by %f.
            const std::string field(f);
            char* end = nullptr;
            const double v = std::strtod(field.c_str(), &end);
            if (field.empty() || end != field.c_str() + field.size())
                throw std::invalid_argument("malformed CSV field '" + field + "'");
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << content;
    out.close();
    if (!out) throw IoError("failed writing " + path.string());
}

nlohmann::json nullable(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

} // namespace

RunSummary summarize(const AggregateMetrics& adaptive, const AggregateMetrics& fixed) {
    RunSummary s;
    s.rmse_deg_adaptive = rad_to_deg(adaptive.time_averaged_rmse());
    s.rmse_deg_fixed = rad_to_deg(fixed.time_averaged_rmse());
    s.correlation_adaptive = adaptive.pearson_e_vs_abs_err;
    double m = 0.0;
    for (double v : adaptive.mean_m_per_step) m += v;
    s.mean_m_adaptive = adaptive.mean_m_per_step.empty() ? 0.0 : m / static_cast<double>(adaptive.mean_m_per_step.size());
    return s;
}

std::string format_trace_csv(const EpisodeTrace& trace) {
    std::string out(kTraceHeader);
    out += '\n';
    for (const auto& r : trace.rows) {
        out += std::to_string(r.k) + ',' + f6(rad_to_deg(r.phi_true)) + ',' + f6(rad_to_deg(r.phi_hat)) + ',' +
               f6(rad_to_deg(r.e_k)) + ',' + std::to_string(r.m_k) + ',' + f6(to_db(r.snr)) + ',' +
               f6(rad_to_deg(r.abs_err)) + '\n';
    }
    return out;
}

std::string format_aggregate_csv(const AggregateMetrics& adaptive, const AggregateMetrics& fixed) {
    if (adaptive.rmse_per_step.size() != fixed.rmse_per_step.size())
        throw std::invalid_argument("adaptive and fixed runs differ in length");
    std::string out(kAggregateHeader);
    out += '\n';
    for (std::size_t k = 0; k < adaptive.rmse_per_step.size(); ++k) {
        out += std::to_string(k + 1) + ',' + f6(rad_to_deg(adaptive.rmse_per_step[k])) + ',' +
               f6(rad_to_deg(fixed.rmse_per_step[k])) + ',' + f6(adaptive.mean_m_per_step[k]) + ',' +
               f6(to_db(adaptive.mean_snr_per_step[k])) + '\n';
    }
    return out;
}

std::string format_json(const SimConfig& cfg, const MonteCarloResult& adaptive, const MonteCarloResult& fixed) {
    using nlohmann::json;
    const RunSummary s = summarize(adaptive.metrics, fixed.metrics);
    json config = {{"m0", cfg.m0},
                   {"s", cfg.s},
                   {"d", cfg.d},
                   {"k_steps", cfg.k_steps},
                   {"runs", cfg.runs},
                   {"seed", cfg.seed},
                   {"alpha0_re", cfg.x0.alpha_re},
                   {"alpha0_im", cfg.x0.alpha_im},
                   {"phi0_deg", cfg.x0.phi.degrees()},
                   {"sigma_alpha", cfg.process_noise.sigma_alpha_re},
                   {"sigma_phi_deg", rad_to_deg(cfg.process_noise.sigma_phi)},
                   {"snr0_db", cfg.snr0_db},
                   {"measurement_noise", cfg.measurement_noise}};
    json steps = json::array();
    const auto& a = adaptive.metrics;
    const auto& f = fixed.metrics;
    for (std::size_t k = 0; k < a.rmse_per_step.size(); ++k) {
        steps.push_back({{"k", k + 1},
                         {"rmse_deg_adaptive", rad_to_deg(a.rmse_per_step[k])},
                         {"rmse_deg_fixed", rad_to_deg(f.rmse_per_step[k])},
                         {"mean_m", a.mean_m_per_step[k]},
                         {"mean_snr_db", nullable(to_db(a.mean_snr_per_step[k]))}});
    }
    json doc = {{"config", config},
                {"summary",
                 {{"rmse_deg_adaptive", s.rmse_deg_adaptive},
                  {"rmse_deg_fixed", s.rmse_deg_fixed},
                  {"correlation_adaptive", nullable(s.correlation_adaptive)},
                  {"correlation_fixed", nullable(f.pearson_e_vs_abs_err)},
                  {"mean_m_adaptive", s.mean_m_adaptive}}},
                {"steps", steps}};
    return doc.dump(2) + '\n';
}

std::vector<AggregateRow> parse_aggregate_csv(std::string_view text) {
    std::vector<AggregateRow> out;
    for (const auto& r : parse_table(text, kAggregateHeader, 5))
        out.push_back({static_cast<std::size_t>(r[0]), r[1], r[2], r[3], r[4]});
    return out;
}

std::vector<TraceCsvRow> parse_trace_csv(std::string_view text) {
    std::vector<TraceCsvRow> out;
    for (const auto& r : parse_table(text, kTraceHeader, 7))
        out.push_back({static_cast<std::size_t>(r[0]), r[1], r[2], r[3], static_cast<std::size_t>(r[4]), r[5], r[6]});
    return out;
}

void write_outputs(const std::filesystem::path& out_dir, const SimConfig& cfg, const MonteCarloResult& adaptive,
                   const MonteCarloResult& fixed, unsigned formats) {
    if ((formats & (kFormatCsv | kFormatJson)) == 0) throw std::invalid_argument("no output format selected");
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec || !std::filesystem::is_directory(out_dir))
        throw IoError("cannot create output directory " + out_dir.string());

    if (formats & kFormatCsv) {
        write_file(out_dir / "aggregate.csv", format_aggregate_csv(adaptive.metrics, fixed.metrics));
        for (const auto* result : {&adaptive, &fixed}) {
            const std::string mode(result == &adaptive ? "adaptive" : "fixed");
            for (std::size_t i = 0; i < result->traces.size(); ++i)
                write_file(out_dir / ("trace_run" + std::to_string(i) + "_" + mode + ".csv"),
                           format_trace_csv(result->traces[i]));
        }
    }
    if (formats & kFormatJson) write_file(out_dir / "aggregate.json", format_json(cfg, adaptive, fixed));
    write_file(out_dir / "config.txt", format_config(cfg));
}

} // namespace beamtrack
