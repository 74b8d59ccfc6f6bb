#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace holelab::mc {

struct McEstimate {
    int m = 1;
    int N = 0;
    double r = 0;
    int k = 0;
    long long trials = 0;
    long long hits = 0;
    double p_hat = 0;
    double ci_low = 0;
    double ci_high = 1;
    std::optional<double> neg_log_over_npow;  // -log(p_hat) / N^{m+1}, when hits > 0
    double boundary_flag_rate = 0;
    std::uint64_t master_seed = 0;
    std::uint64_t trial_offset = 0;
};

struct EstimateConfig {
    int m = 1;
    int N = 1;
    double r = 1.0;
    int k = 0;
    long long trials = 0;
    std::uint64_t master_seed = 0;
    std::uint64_t trial_offset = 0;
    int workers = 0;       // <= 0: hardware concurrency
    int grid_res = 16;     // m = 2 slice resolution
    double boundary_tol = -1;  // <= 0: default 1e-9 * r
};

struct SweepPoint {
    int N = 0;
    long long trials = 0;
    long long hits = 0;
    double p_hat = 0;
    double ci_low = 0;
    double ci_high = 1;
    double boundary_flag_rate = 0;
};

struct SweepFit {
    int m = 1;
    double r = 0;
    int k = 0;
    std::vector<SweepPoint> points;
    int used_points = 0;   // points with hits > 0 entering the fit
    double slope = 0;      // of -log p_hat against N^{m+1}
    double intercept = 0;
    double theory = 0;     // asymptotic decay constant for (m, r)
    double ratio = 0;      // slope / theory
    std::vector<std::string> warnings;
};

struct BoundCheckReport {
    McEstimate estimate;
    double omega_log = 0;   // log of the analytic lower-bound event probability
    double omega = 0;
    bool pass = false;      // ci_high >= omega
    double positive_lattice_sum = 0;  // context: R-type lattice sum at (1, N, r)
    double neg_log_p_hat = 0;
};

/// Exact (Clopper-Pearson) two-sided binomial interval.
std::pair<double, double> clopper_pearson(long long hits, long long trials,
                                          double confidence = 0.95);

/// Regularized incomplete beta I_x(a, b); exposed for the interval tests.
double reg_inc_beta(double a, double b, double x);

/// Estimate the probability that a draw has at most k zeros in the disc
/// (m = 1) or no zero in the polydisc (m = 2, k = 0 only).  Hit counts are a
/// pure function of (master_seed, trial index), so results are identical for
/// any worker count and the campaign can be resumed by trial ranges.
McEstimate estimate_hole_probability(const EstimateConfig& cfg);

/// Run estimate_hole_probability across N_list and fit
/// -log p_hat ~ slope * N^{m+1} + intercept by weighted least squares
/// (weights from the CI width in log scale).  Refuses with fewer than 3
/// usable points.
SweepFit sweep_fit(int m, double r, int k, const std::vector<int>& N_list,
                   long long trials, std::uint64_t master_seed, int workers = 0);

/// Fit a caller-supplied probability curve instead of running trials
/// (synthetic injection; exercises the fit plumbing end to end).
SweepFit synthetic_sweep(int m, double r, int k, const std::vector<int>& N_list,
                         const std::function<double(int)>& p_of_N);

/// Fit pre-collected points (used by campaign-file merging).
SweepFit fit_points(int m, double r, int k, std::vector<SweepPoint> points);

/// Compare a Monte Carlo estimate at (1, N, r) against the analytic
/// coefficient-event lower bound.  Requires trials >= 10^4.
BoundCheckReport lower_bound_check(int N, double r, long long trials,
                                   std::uint64_t master_seed, int workers = 0);

}  // namespace holelab::mc
