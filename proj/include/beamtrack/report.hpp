// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The beamtrack Authors

// CSV / JSON export of traces and aggregate metrics. Angles are written in
// degrees with six decimals, SNR in dB.

#pragma once

#include "beamtrack/sim.hpp"

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace beamtrack {

inline constexpr std::string_view kTraceHeader = "k,phi_true_deg,phi_hat_deg,e_k_deg,m_k,snr_db,abs_err_deg";
inline constexpr std::string_view kAggregateHeader = "k,rmse_deg_adaptive,rmse_deg_fixed,mean_m,mean_snr_db";

enum Format : unsigned { kFormatCsv = 1u, kFormatJson = 2u };

struct RunSummary {
    double rmse_deg_adaptive = 0.0; // time-averaged
    double rmse_deg_fixed = 0.0;
    double correlation_adaptive = 0.0; // pooled e_k vs |error|, NaN if undefined
    double mean_m_adaptive = 0.0;
};

RunSummary summarize(const AggregateMetrics& adaptive, const AggregateMetrics& fixed);

std::string format_trace_csv(const EpisodeTrace& trace);

// mean_m and mean_snr_db columns describe the adaptive run.
std::string format_aggregate_csv(const AggregateMetrics& adaptive, const AggregateMetrics& fixed);

std::string format_json(const SimConfig& cfg, const MonteCarloResult& adaptive, const MonteCarloResult& fixed);

struct AggregateRow {
    std::size_t k = 0;
    double rmse_deg_adaptive = 0.0;
    double rmse_deg_fixed = 0.0;
    double mean_m = 0.0;
    double mean_snr_db = 0.0;
};

struct TraceCsvRow {
    std::size_t k = 0;
    double phi_true_deg = 0.0;
    double phi_hat_deg = 0.0;
    double e_k_deg = 0.0;
    std::size_t m_k = 0;
    double snr_db = 0.0;
    double abs_err_deg = 0.0;
};

// Throws std::invalid_argument on a header mismatch or malformed row.
std::vector<AggregateRow> parse_aggregate_csv(std::string_view text);
std::vector<TraceCsvRow> parse_trace_csv(std::string_view text);

// Writes aggregate.{csv,json} and trace_run<i>_<mode>.csv for every run into
// out_dir, creating it if needed. Throws IoError on any filesystem failure.
void write_outputs(const std::filesystem::path& out_dir, const SimConfig& cfg, const MonteCarloResult& adaptive,
                   const MonteCarloResult& fixed, unsigned formats);

} // namespace beamtrack
