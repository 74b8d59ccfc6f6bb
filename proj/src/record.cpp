#include "holelab/record.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#ifndef HOLELAB_GIT_REVISION
#define HOLELAB_GIT_REVISION "unknown"
#endif

namespace holelab::record {

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Json make_record(const std::string& command, Json config, Json results) {
    Json rec;
    rec["schema_version"] = 1;
    rec["timestamp"] = iso_timestamp();
    rec["command"] = command;
    rec["config"] = std::move(config);
    rec["results"] = std::move(results);
    rec["provenance"] = {{"git_revision", HOLELAB_GIT_REVISION},
                         {"generator", "threefry2x64-20"}};
    if (rec["config"].contains("seed"))
        rec["provenance"]["seed"] = rec["config"]["seed"];
    return rec;
}

Json to_json(const mc::McEstimate& e) {
    Json j{{"m", e.m},
           {"N", e.N},
           {"r", e.r},
           {"k", e.k},
           {"trials", e.trials},
           {"hits", e.hits},
           {"p_hat", e.p_hat},
           {"ci_low", e.ci_low},
           {"ci_high", e.ci_high},
           {"boundary_flag_rate", e.boundary_flag_rate},
           {"seed", e.master_seed},
           {"trial_offset", e.trial_offset}};
    if (e.neg_log_over_npow) j["neg_log_over_npow"] = *e.neg_log_over_npow;
    return j;
}

Json to_json(const mc::SweepFit& f) {
    Json pts = Json::array();
    for (const auto& p : f.points)
        pts.push_back({{"N", p.N},
                       {"trials", p.trials},
                       {"hits", p.hits},
                       {"p_hat", p.p_hat},
                       {"ci_low", p.ci_low},
                       {"ci_high", p.ci_high},
                       {"boundary_flag_rate", p.boundary_flag_rate}});
    return Json{{"m", f.m},
                {"r", f.r},
                {"k", f.k},
                {"points", pts},
                {"used_points", f.used_points},
                {"slope", f.slope},
                {"intercept", f.intercept},
                {"theory", f.theory},
                {"ratio", f.ratio},
                {"warnings", f.warnings}};
}

std::string csv_header() {
    return "m,N,r,k,trials,hits,p_hat,ci_low,ci_high,boundary_flag_rate,seed";
}

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

std::string csv_row(const mc::McEstimate& e) {
    std::ostringstream os;
    os << e.m << ',' << e.N << ',' << fmt(e.r) << ',' << e.k << ',' << e.trials << ','
       << e.hits << ',' << fmt(e.p_hat) << ',' << fmt(e.ci_low) << ',' << fmt(e.ci_high)
       << ',' << fmt(e.boundary_flag_rate) << ',' << e.master_seed;
    return os.str();
}

std::vector<CsvRow> read_campaign_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open campaign file: " + path);
    std::vector<CsvRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.rfind("m,", 0) == 0 || line[0] == '#') continue;
        std::istringstream ls(line);
        CsvRow row;
        char c = 0;
        ls >> row.m >> c >> row.N >> c >> row.r >> c >> row.k >> c >> row.trials >> c >>
            row.hits >> c >> row.p_hat >> c >> row.ci_low >> c >> row.ci_high >> c >>
            row.boundary_flag_rate >> c >> row.seed;
        if (!ls) throw std::runtime_error("malformed campaign row: " + line);
        rows.push_back(row);
    }
    return rows;
}

mc::SweepFit merge_and_fit(const std::vector<CsvRow>& rows) {
    if (rows.empty()) throw std::invalid_argument("no campaign rows");
    const int m = rows[0].m, k = rows[0].k;
    const double r = rows[0].r;
    std::map<int, mc::SweepPoint> by_n;
    for (const CsvRow& row : rows) {
        if (row.m != m || row.k != k || row.r != r)
            throw std::invalid_argument(
                "campaign rows mix (m, r, k) groups; merge one group at a time");
        auto& pt = by_n[row.N];
        pt.N = row.N;
        const double prev_flags = pt.boundary_flag_rate * pt.trials;
        pt.trials += row.trials;
        pt.hits += row.hits;
        pt.boundary_flag_rate =
            (prev_flags + row.boundary_flag_rate * row.trials) / pt.trials;
    }
    std::vector<mc::SweepPoint> pts;
    for (auto& [N, pt] : by_n) {
        pt.p_hat = static_cast<double>(pt.hits) / static_cast<double>(pt.trials);
        std::tie(pt.ci_low, pt.ci_high) = mc::clopper_pearson(pt.hits, pt.trials);
        pts.push_back(pt);
    }
    return mc::fit_points(m, r, k, std::move(pts));
}

std::string sweep_plot_data(const mc::SweepFit& fit) {
    std::ostringstream os;
    os << "# x = N^" << (fit.m + 1)
       << "  y = -log(p_hat)  [y_lo y_hi from the exact binomial interval]\n";
    os << "# slope " << fmt(fit.slope) << "  intercept " << fmt(fit.intercept)
       << "  theory " << fmt(fit.theory) << '\n';
    for (const auto& p : fit.points) {
        if (p.hits <= 0) {
            os << "# N=" << p.N << " had no hits; omitted\n";
            continue;
        }
        const double x = std::pow(static_cast<double>(p.N), fit.m + 1);
        os << fmt(x) << ' ' << fmt(-std::log(p.p_hat)) << ' '
           << fmt(p.ci_high > 0 ? -std::log(p.ci_high) : 0.0) << ' '
           << fmt(p.ci_low > 0 ? -std::log(p.ci_low) : 0.0) << '\n';
    }
    return os.str();
}

std::string sweep_svg(const mc::SweepFit& fit) {
    constexpr double W = 640, H = 440, L = 70, B = 50, T = 20, R = 20;
    double xmax = 1, ymax = 1;
    for (const auto& p : fit.points) {
        if (p.hits <= 0) continue;
        xmax = std::max(xmax, std::pow(static_cast<double>(p.N), fit.m + 1));
        const double ytop = p.ci_low > 0 ? -std::log(p.ci_low) : -std::log(p.p_hat);
        ymax = std::max(ymax, ytop);
    }
    ymax = std::max(ymax, fit.slope * xmax + fit.intercept);
    ymax *= 1.05;
    xmax *= 1.05;
    auto X = [&](double x) { return L + x / xmax * (W - L - R); };
    auto Y = [&](double y) { return H - B - y / ymax * (H - B - T); };

    std::ostringstream os;
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H
       << "'>\n";
    os << "<rect width='100%' height='100%' fill='white'/>\n";
    os << "<line x1='" << L << "' y1='" << H - B << "' x2='" << W - R << "' y2='"
       << H - B << "' stroke='black'/>\n";
    os << "<line x1='" << L << "' y1='" << T << "' x2='" << L << "' y2='" << H - B
       << "' stroke='black'/>\n";
    os << "<text x='" << (W / 2) << "' y='" << (H - 12)
       << "' font-size='13' text-anchor='middle'>N^" << (fit.m + 1) << "</text>\n";
    os << "<text x='16' y='" << (H / 2)
       << "' font-size='13' transform='rotate(-90 16 " << (H / 2)
       << ")' text-anchor='middle'>-log p</text>\n";
    // Fit line.
    os << "<line x1='" << X(0) << "' y1='" << Y(fit.intercept) << "' x2='" << X(xmax)
       << "' y2='" << Y(fit.slope * xmax + fit.intercept)
       << "' stroke='steelblue' stroke-width='1.5'/>\n";
    for (const auto& p : fit.points) {
        if (p.hits <= 0) continue;
        const double x = std::pow(static_cast<double>(p.N), fit.m + 1);
        const double y = -std::log(p.p_hat);
        const double ylo = p.ci_high > 0 ? -std::log(p.ci_high) : y;
        const double yhi = p.ci_low > 0 ? -std::log(p.ci_low) : y;
        os << "<line x1='" << X(x) << "' y1='" << Y(ylo) << "' x2='" << X(x) << "' y2='"
           << Y(yhi) << "' stroke='crimson'/>\n";
        os << "<circle cx='" << X(x) << "' cy='" << Y(y)
           << "' r='3' fill='crimson'/>\n";
    }
    os << "<text x='" << (L + 8) << "' y='" << (T + 14) << "' font-size='12'>slope "
       << fit.slope << " (theory " << fit.theory << ")</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace holelab::record
