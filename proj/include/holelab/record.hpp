#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "holelab/montecarlo.hpp"

namespace holelab::record {

using Json = nlohmann::json;

/// Self-describing result envelope: schema version, UTC timestamp, the full
/// config echo, results, and provenance (git revision, generator name, seed).
Json make_record(const std::string& command, Json config, Json results);

Json to_json(const mc::McEstimate& e);
Json to_json(const mc::SweepFit& f);

std::string csv_header();
std::string csv_row(const mc::McEstimate& e);

struct CsvRow {
    int m = 1;
    int N = 0;
    double r = 0;
    int k = 0;
    long long trials = 0;
    long long hits = 0;
    double p_hat = 0;
    double ci_low = 0;
    double ci_high = 1;
    double boundary_flag_rate = 0;
    std::uint64_t seed = 0;
};

std::vector<CsvRow> read_campaign_csv(const std::string& path);

/// Merge rows (summing trials and hits per N, intervals recomputed) and fit.
/// All rows must share one (m, r, k) triple.
mc::SweepFit merge_and_fit(const std::vector<CsvRow>& rows);

/// Two-column plot data: N^{m+1}, -log p_hat, with CI band columns.
std::string sweep_plot_data(const mc::SweepFit& fit);

/// Minimal self-contained line chart of the sweep and its fit.
std::string sweep_svg(const mc::SweepFit& fit);

std::string iso_timestamp();

}  // namespace holelab::record
