#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "holelab/indices.hpp"

namespace holelab::ensemble {

using Complex = std::complex<double>;

/// One draw from the degree-N Gaussian ensemble in m variables.  coeffs[i]
/// is the raw Gaussian coefficient for the i-th multi-index in enumeration
/// order; evaluation applies the sqrt-binomial weights on the fly.
struct GaussianPolynomial {
    int m = 1;
    int N = 0;
    std::vector<Complex> coeffs;
    std::uint64_t master_seed = 0;
    std::uint64_t trial = 0;
};

struct LogMagnitude {
    double log_abs;  // -inf when the value is exactly 0
    double phase;
};

struct EventProbability {
    double log_value;  // natural log, always finite
    double value;      // exp(log_value), may underflow to 0
};

/// The explicit coefficient event behind the analytic hole lower bound: the
/// head coefficient exceeds sqrt(N) while coefficient K stays below its
/// threshold t_K (stored as log t_K, in enumeration order, head omitted).
struct HoleEventSpec {
    int m = 1;
    int N = 0;
    double r = 1;
    double head_threshold = 0;           // sqrt(N)
    std::vector<double> log_thresholds;  // binom(N+m, m) - 1 entries
};

HoleEventSpec hole_event_spec(int m, int N, double r);

/// Draw coefficients keyed by (master_seed, trial, coefficient rank).  The
/// same arguments always reproduce the same draw, bit for bit, regardless of
/// worker count or call order.  Coefficients are standard complex Gaussians
/// (E c = 0, E|c|^2 = 1) via the exact polar transform
///   c = sqrt(-log u1) * exp(2 pi i u2).
GaussianPolynomial sample(int m, int N, std::uint64_t master_seed, std::uint64_t trial);

/// The two Gaussians behind one coefficient; exposed for distribution tests.
Complex gaussian_at(std::uint64_t master_seed, std::uint64_t trial, std::uint64_t rank);

/// Evaluate sum_K c_K sqrt(C(N,K)) z^K.  For m = 1 a fused recurrence with
/// incremental weight ratios is used; it stays finite up to N ~ 1e4 at
/// moderate |z| and any N through evaluate_log.
Complex evaluate(const GaussianPolynomial& p, const std::vector<Complex>& z);

/// One-variable convenience overload.
Complex evaluate(const GaussianPolynomial& p, Complex z);

/// (log|s(z)|, arg s(z)) via an internally rescaled recurrence; m = 1 only.
LogMagnitude evaluate_log(const GaussianPolynomial& p, Complex z);

/// Monomial coefficients with the sqrt-binomial weights folded in:
/// a_k = c_k sqrt(C(N,k)); m = 1 only.
std::vector<Complex> weighted_coefficients(const GaussianPolynomial& p);

/// Probability of the explicit coefficient event that forces the polynomial
/// away from zero on the closed polydisc of radius r: the head coefficient
/// is at least sqrt(N) in modulus and every other coefficient is below its
/// threshold.  Exact product formula, computed in log scale.
EventProbability hole_lower_bound(int m, int N, double r);

}  // namespace holelab::ensemble
