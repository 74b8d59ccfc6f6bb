#include "holelab/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "holelab/ensemble.hpp"
#include "holelab/rates.hpp"
#include "holelab/zeros.hpp"

namespace holelab::mc {

namespace {

// Continued fraction for the incomplete beta (Lentz).
double betacf(double a, double b, double x) {
    constexpr int kMaxIter = 400;
    constexpr double kEps = 1e-15, kTiny = 1e-300;
    const double qab = a + b, qap = a + 1, qam = a - 1;
    double c = 1, d = 1 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1) < kEps) break;
    }
    return h;
}

}  // namespace

double reg_inc_beta(double a, double b, double x) {
    if (x <= 0) return 0;
    if (x >= 1) return 1;
    const double bt = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                               a * std::log(x) + b * std::log1p(-x));
    if (x < (a + 1) / (a + b + 2)) return bt * betacf(a, b, x) / a;
    return 1 - bt * betacf(b, a, 1 - x) / b;
}

namespace {

double beta_quantile(double a, double b, double q) {
    double lo = 0, hi = 1;
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        (reg_inc_beta(a, b, mid) < q ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::pair<double, double> clopper_pearson(long long hits, long long trials,
                                          double confidence) {
    if (trials < 1 || hits < 0 || hits > trials)
        throw std::invalid_argument("clopper_pearson: bad counts");
    if (!(confidence > 0) || !(confidence < 1))
        throw std::invalid_argument("clopper_pearson: confidence in (0,1)");
    const double alpha = 1 - confidence;
    const double h = static_cast<double>(hits), t = static_cast<double>(trials);
    const double lo = hits == 0 ? 0.0 : beta_quantile(h, t - h + 1, alpha / 2);
    const double hi = hits == trials ? 1.0 : beta_quantile(h + 1, t - h, 1 - alpha / 2);
    return {lo, hi};
}

namespace {

struct Tally {
    long long hits = 0;
    long long flagged = 0;
};

Tally run_range(const EstimateConfig& cfg, std::uint64_t first, std::uint64_t last) {
    Tally t;
    const double tol = cfg.boundary_tol > 0 ? cfg.boundary_tol : 1e-9 * cfg.r;
    for (std::uint64_t trial = first; trial < last; ++trial) {
        const auto draw = ensemble::sample(cfg.m, cfg.N, cfg.master_seed, trial);
        if (cfg.m == 1) {
            const zeros::ZeroCount zc = zeros::count_zeros_in_disc(draw, cfg.r, tol);
            if (zc.inside <= cfg.k) ++t.hits;
            if (zc.boundary_flags > 0) ++t.flagged;
        } else {
            if (!zeros::polydisc_zero_search(draw, cfg.r, cfg.grid_res).has_zero)
                ++t.hits;
        }
    }
    return t;
}

}  // namespace

McEstimate estimate_hole_probability(const EstimateConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (cfg.m != 1 && cfg.m != 2)
        throw std::invalid_argument("estimation supports m in {1, 2}");
    if (cfg.m == 2 && cfg.k != 0)
        throw std::invalid_argument("m = 2 supports k = 0 only");
    if (cfg.k < 0) throw std::invalid_argument("k must be >= 0");
    if (!(cfg.r > 0)) throw std::invalid_argument("radius must be positive");

    int workers = cfg.workers;
    if (workers <= 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<int>(
        std::min<long long>(workers, cfg.trials));

    const std::uint64_t begin = cfg.trial_offset;
    const std::uint64_t end = cfg.trial_offset + static_cast<std::uint64_t>(cfg.trials);
    std::vector<Tally> parts(workers);
    {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const std::uint64_t chunk =
            (static_cast<std::uint64_t>(cfg.trials) + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t lo = begin + chunk * w;
            const std::uint64_t hi = std::min(end, lo + chunk);
            pool.emplace_back([&, w, lo, hi] {
                if (lo < hi) parts[w] = run_range(cfg, lo, hi);
            });
        }
        for (auto& th : pool) th.join();
    }
    Tally total;
    for (const Tally& t : parts) {
        total.hits += t.hits;
        total.flagged += t.flagged;
    }

    McEstimate est;
    est.m = cfg.m;
    est.N = cfg.N;
    est.r = cfg.r;
    est.k = cfg.k;
    est.trials = cfg.trials;
    est.hits = total.hits;
    est.p_hat = static_cast<double>(total.hits) / static_cast<double>(cfg.trials);
    std::tie(est.ci_low, est.ci_high) = clopper_pearson(total.hits, cfg.trials);
    if (total.hits > 0 && cfg.N >= 1)
        est.neg_log_over_npow =
            -std::log(est.p_hat) / std::pow(static_cast<double>(cfg.N), cfg.m + 1);
    est.boundary_flag_rate =
        static_cast<double>(total.flagged) / static_cast<double>(cfg.trials);
    est.master_seed = cfg.master_seed;
    est.trial_offset = cfg.trial_offset;
    return est;
}

namespace {

double theory_constant(int m, double r) {
    const rates::RateReport rep = rates::hole_rate(m, r);
    if (m == 1) return *rep.one_d_rate;
    return r >= 1 ? rep.simplex_integral : rep.upper_constant;
}

}  // namespace

SweepFit fit_points(int m, double r, int k, std::vector<SweepPoint> points) {
    SweepFit fit;
    fit.m = m;
    fit.r = r;
    fit.k = k;
    std::sort(points.begin(), points.end(),
              [](const SweepPoint& a, const SweepPoint& b) { return a.N < b.N; });
    fit.points = std::move(points);

    double sw = 0, swx = 0, swy = 0, swxx = 0, swxy = 0;
    for (const SweepPoint& pt : fit.points) {
        if (pt.hits <= 0) continue;
        ++fit.used_points;
        const double x = std::pow(static_cast<double>(pt.N), m + 1);
        const double y = -std::log(pt.p_hat);
        // CI width in log scale as the y uncertainty; floor keeps exact
        // synthetic points usable.
        double sigma = 0;
        if (pt.ci_low > 0 && pt.ci_high > pt.ci_low)
            sigma = (std::log(pt.ci_high) - std::log(pt.ci_low)) / (2 * 1.959964);
        const double w = 1.0 / std::max(sigma * sigma, 1e-12);
        sw += w;
        swx += w * x;
        swy += w * y;
        swxx += w * x * x;
        swxy += w * x * y;
    }
    if (fit.used_points < 3)
        throw std::runtime_error("sweep fit refused: fewer than 3 usable points");
    const double det = sw * swxx - swx * swx;
    if (det == 0) throw std::runtime_error("sweep fit refused: degenerate design");
    fit.slope = (sw * swxy - swx * swy) / det;
    fit.intercept = (swxx * swy - swx * swxy) / det;
    fit.theory = theory_constant(m, r);
    fit.ratio = fit.theory != 0 ? fit.slope / fit.theory : 0;

    const SweepPoint& last = fit.points.back();
    if (last.hits < 10)
        fit.warnings.push_back("fewer than 10 hits at N = " + std::to_string(last.N) +
                               "; slope poorly constrained");
    return fit;
}

SweepFit sweep_fit(int m, double r, int k, const std::vector<int>& N_list,
                   long long trials, std::uint64_t master_seed, int workers) {
    if (N_list.size() < 2) throw std::invalid_argument("need at least two N values");
    if (!std::is_sorted(N_list.begin(), N_list.end()))
        throw std::invalid_argument("N_list must be increasing");
    std::vector<SweepPoint> pts;
    for (int N : N_list) {
        EstimateConfig cfg;
        cfg.m = m;
        cfg.N = N;
        cfg.r = r;
        cfg.k = k;
        cfg.trials = trials;
        cfg.master_seed = master_seed;
        cfg.workers = workers;
        const McEstimate est = estimate_hole_probability(cfg);
        pts.push_back({N, est.trials, est.hits, est.p_hat, est.ci_low, est.ci_high,
                       est.boundary_flag_rate});
    }
    return fit_points(m, r, k, std::move(pts));
}

SweepFit synthetic_sweep(int m, double r, int k, const std::vector<int>& N_list,
                         const std::function<double(int)>& p_of_N) {
    std::vector<SweepPoint> pts;
    for (int N : N_list) {
        const double p = p_of_N(N);
        if (!(p >= 0) || p > 1)
            throw std::invalid_argument("injected probability outside [0, 1]");
        SweepPoint pt;
        pt.N = N;
        pt.trials = 0;
        pt.hits = p > 0 ? 1 : 0;  // marks the point usable; no sampling happened
        pt.p_hat = p;
        pt.ci_low = p;
        pt.ci_high = p;
        pts.push_back(pt);
    }
    return fit_points(m, r, k, std::move(pts));
}

BoundCheckReport lower_bound_check(int N, double r, long long trials,
                                   std::uint64_t master_seed, int workers) {
    if (trials < 10000)
        throw std::invalid_argument("lower_bound_check needs at least 10^4 trials");
    EstimateConfig cfg;
    cfg.m = 1;
    cfg.N = N;
    cfg.r = r;
    cfg.k = 0;
    cfg.trials = trials;
    cfg.master_seed = master_seed;
    cfg.workers = workers;

    BoundCheckReport rep;
    rep.estimate = estimate_hole_probability(cfg);
    const ensemble::EventProbability omega = ensemble::hole_lower_bound(1, N, r);
    rep.omega_log = omega.log_value;
    rep.omega = omega.value;
    rep.pass = rep.estimate.ci_high >= omega.value;
    rep.positive_lattice_sum = rates::lattice_log_sum_positive(1, N, r).value;
    rep.neg_log_p_hat =
        rep.estimate.hits > 0 ? -std::log(rep.estimate.p_hat) : 0.0;
    return rep;
}

}  // namespace holelab::mc
