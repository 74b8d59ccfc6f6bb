#pragma once

#include <optional>
#include <vector>

namespace holelab::rates {

/// Point x = (x_1,...,x_m) with x_i >= 0 and sum <= 1 (tolerance 1e-12).
struct SimplexPoint {
    std::vector<double> x;

    int dim() const { return static_cast<int>(x.size()); }
    double sum() const;
};

/// All asymptotic decay constants for a (m, r) pair.  Log of the hole
/// probability behaves like -(constant) * N^{m+1}.
struct RateReport {
    int m = 0;
    double r = 0;
    double alpha0 = 1;              // maximizing truncation level in (0, 1]
    double simplex_integral = 0;    // integral of the rate function over the full simplex
    std::optional<double> restricted_integral;  // over the region where the rate function >= 0
    double upper_constant = 0;      // truncated integral at alpha0
    std::optional<double> one_d_rate;  // m = 1 closed form alpha0*(2 log r + 1 - log alpha0)/2
};

struct LatticeSumResult {
    double value = 0;        // natural-log scale
    long long term_count = 0;
};

struct TruncatedIntegral {
    double value = 0;
    double derivative = 0;
};

/// The rate function 2*sum(x)*log r - [sum x_i log x_i + (1-sum x) log(1-sum x)],
/// with 0 log 0 = 0.  x must lie in the standard simplex.
double energy(int m, double r, const SimplexPoint& x);

/// Closed form of the full-simplex integral of the rate function:
/// 2 m log r / (m+1)! + (1/m!) * sum_{k=2}^{m+1} 1/k.
double simplex_integral_closed(int m, double r);

/// Independent cross-check by iterated adaptive quadrature; m <= 3.
double simplex_integral_quadrature(int m, double r, double tol);

/// Maximizer of the truncated integral: 1 when 2 log r + sum_{k=2}^m 1/k >= 0,
/// otherwise the unique root in (0,1) of
/// (2 log r + sum_{k=2}^m 1/k) a = a log a + (1-a) log(1-a).
double alpha0(int m, double r);

/// Integral of the rate function over {x >= 0, sum x <= alpha}, plus its
/// derivative in alpha.  alpha in (0, 1].
TruncatedIntegral truncated_integral(int m, double r, double alpha);

/// Closed form of the maximal truncated integral: the full-simplex value when
/// alpha0 = 1, else (1/(m+1)!) [(1-a^m) log(1-a) + sum_{k=1}^m a^k/k] at a = alpha0.
double truncated_max_closed(int m, double r);

/// Assemble every decay constant for (m, r).  The restricted integral is
/// evaluated by quadrature for m <= 3 and left empty above that.
RateReport hole_rate(int m, double r);

/// N^2 coefficient of the general simply-connected-domain upper bound:
/// log|phi'(0)| + 1/2 for the Riemann map phi fixing the origin.
double conformal_upper_constant(double phi_prime_abs);

/// Sum over multi-indices with |K| <= floor(alpha*N) of
/// log[ C(N,K) r^{2|K|} ], via log-gamma.  alpha = 1 gives the full sum.
LatticeSumResult lattice_log_sum(int m, int N, double r, double alpha = 1.0);

/// Same sum restricted to terms with C(N,K) r^{2|K|} >= 1 (log-term >= 0,
/// ties included).
LatticeSumResult lattice_log_sum_positive(int m, int N, double r);

/// Exact-integer-backed evaluation of lattice_log_sum for cross-checks
/// (N <= 200 intended).
LatticeSumResult lattice_log_sum_exact(int m, int N, double r, double alpha = 1.0);

struct LogSineMoment {
    double value = 0;            // agreed value of the two schemes
    double scheme_split = 0;     // singularity-extraction scheme
    double scheme_tanh_sinh = 0; // double-exponential scheme
};

/// (1/(m-1)!) * integral_0^1 x^m log(2 sin(pi x)) dx, computed by two
/// independent schemes that must agree within tol.  m >= 1; m = 0 gives the
/// plain log-sine integral (which is 0).
LogSineMoment log_sine_moment(int m, double tol);

struct CovarianceLogDet {
    double via_product = 0;                 // sum of log weights + pairwise log distances
    std::optional<double> via_matrix;       // log det of the covariance matrix, N <= 40
    double lattice_q = 0;                   // lattice_log_sum(1, N, rho)
    double identity_residual = 0;           // via_product - lattice_q - (N+1) log(N+1)
};

/// log det of the covariance of boundary samples at the N+1 scaled roots of
/// unity rho * e^{2 pi i j/(N+1)}.  The product route sums binomial logs and
/// pairwise distances; the matrix route factorizes ((1 + xi_i conj(xi_j))^N)
/// in extended precision (only for N <= 40).
CovarianceLogDet covariance_logdet_circle(int N, double rho, bool want_matrix = true);

double harmonic_tail(int from, int to);  // sum_{k=from}^{to} 1/k, 0 when empty

}  // namespace holelab::rates
