#include "holelab/rates.hpp"

#include <gmpxx.h>

#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "holelab/exact.hpp"
#include "holelab/quadrature.hpp"

namespace holelab::rates {

namespace {

double xlogx(double u) { return u > 0 ? u * std::log(u) : 0.0; }

double factorial_d(int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void require_radius(double r) {
    if (!(r > 0)) throw std::invalid_argument("radius must be positive");
}

}  // namespace

double SimplexPoint::sum() const {
    return std::accumulate(x.begin(), x.end(), 0.0);
}

double harmonic_tail(int from, int to) {
    double s = 0;
    for (int k = from; k <= to; ++k) s += 1.0 / k;
    return s;
}

double energy(int m, double r, const SimplexPoint& x) {
    require_radius(r);
    if (x.dim() != m) throw std::invalid_argument("point dimension mismatch");
    double s = 0, ent = 0;
    for (double xi : x.x) {
        if (xi < -1e-12) throw std::invalid_argument("coordinate below zero");
        const double c = std::max(xi, 0.0);
        s += c;
        ent += xlogx(c);
    }
    if (s > 1 + 1e-12) throw std::invalid_argument("point outside the simplex");
    s = std::min(s, 1.0);
    return 2 * s * std::log(r) - (ent + xlogx(1 - s));
}

double simplex_integral_closed(int m, double r) {
    require_radius(r);
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    return 2 * m * std::log(r) / factorial_d(m + 1) +
           harmonic_tail(2, m + 1) / factorial_d(m);
}

namespace {

// Iterated integral of f(total, sum of x log x) over the simplex, innermost
// tolerances tightened so inner noise stays below the outer budget.
double nested_simplex(int m, double tol,
                      const std::function<double(double, double)>& leaf) {
    std::array<double, 3> level_tol{};
    if (m == 1) level_tol = {tol * 0.9, 0, 0};
    if (m == 2) level_tol = {tol * 0.45, tol * 0.1, 0};
    if (m == 3) level_tol = {tol * 0.45, tol * 0.1, tol * 0.02};
    std::function<double(int, double, double)> body = [&](int level, double s,
                                                          double t) -> double {
        auto f = [&](double x) -> double {
            const double s2 = s + x, t2 = t + xlogx(x);
            if (level + 1 == m) return leaf(s2, t2);
            return body(level + 1, s2, t2);
        };
        return quad::integrate(f, 0.0, 1.0 - s, level_tol[level]);
    };
    return body(0, 0.0, 0.0);
}

}  // namespace

double simplex_integral_quadrature(int m, double r, double tol) {
    require_radius(r);
    if (tol <= 0) throw std::invalid_argument("tol must be positive");
    if (m < 1 || m > 3)
        throw std::invalid_argument("iterated quadrature supports m in [1,3]");
    const double logr = std::log(r);
    return nested_simplex(m, tol, [&](double s, double t) {
        return 2 * logr * s - t - xlogx(1 - s);
    });
}

double alpha0(int m, double r) {
    require_radius(r);
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    const double c = 2 * std::log(r) + harmonic_tail(2, m);
    if (c >= 0) return 1.0;
    auto f = [&](double a) { return c * a - a * std::log(a) - (1 - a) * std::log1p(-a); };
    // Near 0 the -a log a term dominates c*a, so f > 0 there; near 1 the value
    // tends to c < 0, so the root is strictly interior whenever c < 0.
    double lo = 0.5 * std::exp(c);
    if (!(f(lo) > 0)) lo = std::numeric_limits<double>::min();
    double hi = std::nextafter(1.0, 0.0);
    for (int it = 0; it < 130 && hi - lo > 1e-18; ++it) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) > 0 ? lo : hi) = mid;
    }
    double a = 0.5 * (lo + hi);
    for (int it = 0; it < 4; ++it) {
        const double d = c - std::log(a) + std::log1p(-a);
        if (d == 0) break;
        const double step = f(a) / d;
        const double next = a - step;
        if (next > 0 && next < 1) a = next;
    }
    if (std::fabs(f(a)) > 1e-13)
        throw std::runtime_error("alpha0: residual above 1e-13");
    return a;
}

TruncatedIntegral truncated_integral(int m, double r, double alpha) {
    require_radius(r);
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (!(alpha > 0) || alpha > 1)
        throw std::invalid_argument("alpha must lie in (0, 1]");
    const double logr = std::log(r);
    const double fm1 = factorial_d(m - 1);
    const double fm_plus1 = factorial_d(m + 1);
    const double pow_a = std::pow(alpha, m + 1);

    const double tail = quad::integrate(
        [&](double x) { return (1 - x) * std::pow(x, m - 1) * std::log1p(-x); }, 0.0,
        alpha, 1e-12);

    TruncatedIntegral out;
    out.value = 2 * m * logr * pow_a / fm_plus1 -
                m * pow_a / fm_plus1 * (std::log(alpha) - harmonic_tail(2, m + 1)) -
                tail / fm1;
    out.derivative =
        std::pow(alpha, m - 1) / fm1 *
        ((2 * logr + harmonic_tail(2, m)) * alpha -
         (alpha * std::log(alpha) + (1 - alpha) * std::log1p(-alpha)));
    return out;
}

double truncated_max_closed(int m, double r) {
    const double a = alpha0(m, r);
    if (a >= 1.0) return simplex_integral_closed(m, r);
    double power_sum = 0, ak = 1;
    for (int k = 1; k <= m; ++k) {
        ak *= a;
        power_sum += ak / k;
    }
    return ((1 - std::pow(a, m)) * std::log1p(-a) + power_sum) / factorial_d(m + 1);
}

double conformal_upper_constant(double phi_prime_abs) {
    if (!(phi_prime_abs > 0))
        throw std::invalid_argument("|phi'(0)| must be positive");
    return std::log(phi_prime_abs) + 0.5;
}

RateReport hole_rate(int m, double r) {
    require_radius(r);
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    RateReport rep;
    rep.m = m;
    rep.r = r;
    rep.alpha0 = alpha0(m, r);
    rep.simplex_integral = simplex_integral_closed(m, r);
    rep.upper_constant = truncated_integral(m, r, rep.alpha0).value;

    const double logr = std::log(r);
    if (r >= 1) {
        // The rate function is nonnegative on the whole simplex.
        rep.restricted_integral = rep.simplex_integral;
    } else if (m == 1) {
        // In one dimension the nonnegativity region is exactly [0, alpha0].
        rep.restricted_integral = quad::integrate(
            [&](double x) { return 2 * x * logr - xlogx(x) - xlogx(1 - x); }, 0.0,
            rep.alpha0, 1e-11);
    } else if (m <= 3) {
        rep.restricted_integral = nested_simplex(m, 1e-6, [&](double s, double t) {
            return std::max(2 * logr * s - t - xlogx(1 - s), 0.0);
        });
    }

    if (m == 1) {
        const double a = rep.alpha0;
        rep.one_d_rate = 0.5 * a * (2 * logr + 1 - std::log(a));
        if (std::fabs(*rep.restricted_integral - *rep.one_d_rate) > 1e-6 ||
            std::fabs(rep.upper_constant - *rep.one_d_rate) > 1e-6)
            throw std::runtime_error("hole_rate: one-dimensional routes disagree");
    }
    return rep;
}

namespace {

// Walk all multi-indices with |K| <= M accumulating log C(N,K) pieces.
// visit(weight, log_multinomial).
void walk_lattice(int m, int N, int M, const std::vector<double>& lg,
                  const std::function<void(int, double)>& visit) {
    const double head = lg[N];
    std::function<void(int, int, double)> rec = [&](int axis, int used, double den) {
        if (axis == m) {
            visit(used, head - lg[N - used] - den);
            return;
        }
        for (int k = 0; k + used <= M; ++k) rec(axis + 1, used + k, den + lg[k]);
    };
    rec(0, 0, 0.0);
}

std::vector<double> lgamma_table(int N) {
    std::vector<double> lg(N + 1);
    for (int i = 0; i <= N; ++i) lg[i] = std::lgamma(static_cast<double>(i) + 1);
    return lg;
}

}  // namespace

LatticeSumResult lattice_log_sum(int m, int N, double r, double alpha) {
    require_radius(r);
    if (m < 1 || N < 0) throw std::invalid_argument("bad lattice parameters");
    if (!(alpha > 0) || alpha > 1) throw std::invalid_argument("alpha in (0,1] required");
    const int M = static_cast<int>(std::floor(alpha * N + 1e-9));
    const auto lg = lgamma_table(N);
    const double logr = std::log(r);
    LatticeSumResult out;
    walk_lattice(m, N, M, lg, [&](int w, double logc) {
        out.value += logc + 2.0 * w * logr;
        ++out.term_count;
    });
    return out;
}

LatticeSumResult lattice_log_sum_positive(int m, int N, double r) {
    require_radius(r);
    if (m < 1 || N < 0) throw std::invalid_argument("bad lattice parameters");
    const auto lg = lgamma_table(N);
    const double logr = std::log(r);
    LatticeSumResult out;
    walk_lattice(m, N, N, lg, [&](int w, double logc) {
        const double term = logc + 2.0 * w * logr;
        if (term >= 0) {
            out.value += term;
            ++out.term_count;
        }
    });
    return out;
}

LatticeSumResult lattice_log_sum_exact(int m, int N, double r, double alpha) {
    require_radius(r);
    if (m < 1 || N < 0) throw std::invalid_argument("bad lattice parameters");
    if (!(alpha > 0) || alpha > 1) throw std::invalid_argument("alpha in (0,1] required");
    const int M = static_cast<int>(std::floor(alpha * N + 1e-9));
    std::vector<mpz_class> fact(N + 1);
    fact[0] = 1;
    for (int i = 1; i <= N; ++i) fact[i] = fact[i - 1] * i;
    const double logr = std::log(r);
    LatticeSumResult out;
    std::function<void(int, int, mpz_class)> rec = [&](int axis, int used,
                                                       mpz_class den) {
        if (axis == m) {
            mpz_class c = fact[N] / (fact[N - used] * den);
            out.value += exact::log_abs(c) + 2.0 * used * logr;
            ++out.term_count;
            return;
        }
        for (int k = 0; k + used <= M; ++k) rec(axis + 1, used + k, den * fact[k]);
    };
    rec(0, 0, mpz_class(1));
    return out;
}

LogSineMoment log_sine_moment(int m, double tol) {
    if (m < 0) throw std::invalid_argument("m must be >= 0");
    if (tol <= 0) throw std::invalid_argument("tol must be positive");
    const int mu = m;  // weight of the integrand
    const double pref = m <= 1 ? 1.0 : 1.0 / factorial_d(m - 1);

    // Scheme 1: peel log(2 pi x (1-x)) off analytically, integrate the smooth
    // remainder log[sin(pi x) / (pi x (1-x))].
    const double closed = std::log(2 * M_PI) / (mu + 1) - 1.0 / ((mu + 1) * (mu + 1)) -
                          harmonic_tail(1, mu + 1) / (mu + 1);
    auto smooth = [&](double x) {
        const double s = x <= 0.5 ? std::sin(M_PI * x) : std::sin(M_PI * (1 - x));
        return std::pow(x, mu) * std::log(s / (M_PI * x * (1 - x)));
    };
    const double split = closed + quad::integrate(smooth, 0.0, 1.0, tol * 0.25);

    // Scheme 2: tanh-sinh on the raw integrand.  dist is the distance to the
    // nearer endpoint, so sin(pi x) = sin(pi dist) stays accurate near 1.
    const double de = quad::tanh_sinh(
        [&](double x, double dist) {
            const double sp = std::sin(M_PI * (x <= 0.5 ? x : dist));
            return std::pow(x, mu) * std::log(2 * sp);
        },
        0.0, 1.0, tol * 0.25);

    LogSineMoment out;
    out.scheme_split = pref * split;
    out.scheme_tanh_sinh = pref * de;
    if (std::fabs(out.scheme_split - out.scheme_tanh_sinh) > tol)
        throw std::runtime_error("log_sine_moment: schemes disagree by " +
                                 std::to_string(out.scheme_split - out.scheme_tanh_sinh));
    out.value = 0.5 * (out.scheme_split + out.scheme_tanh_sinh);
    return out;
}

// ---------------------------------------------------------------------------
// High-precision complex helpers for the covariance factorization.

namespace {

constexpr int kPrec = 320;  // bits

mpf_class hp(double v) { return mpf_class(v, kPrec); }

mpf_class hp_pi() {
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239), series in exact divisions.
    auto atan_inv = [](long x) {
        mpf_class sum(0, kPrec), term(1, kPrec);
        term /= x;
        const mpf_class x2 = mpf_class(x, kPrec) * x;
        for (long k = 0; k < 300; ++k) {
            mpf_class add = term / (2 * k + 1);
            if (k % 2) sum -= add;
            else sum += add;
            term /= x2;
            if (add < mpf_class(1e-105, kPrec) && k > 2) break;
        }
        return sum;
    };
    static const mpf_class pi = 16 * atan_inv(5) - 4 * atan_inv(239);
    return pi;
}

void hp_sincos(const mpf_class& theta, mpf_class& s, mpf_class& c) {
    // Taylor series; |theta| <= pi so ~70 terms reach 2^-320.
    const mpf_class t2 = theta * theta;
    mpf_class term(theta);
    s = theta;
    for (int k = 1; k < 90; ++k) {
        term *= t2;
        term /= -(2 * k) * (2 * k + 1);
        s += term;
    }
    mpf_class cterm(1, kPrec);
    c = cterm;
    for (int k = 1; k < 90; ++k) {
        cterm *= t2;
        cterm /= -(2 * k - 1) * (2 * k);
        c += cterm;
    }
}

struct HpC {
    mpf_class re{0, kPrec}, im{0, kPrec};
};

HpC mul(const HpC& a, const HpC& b) {
    HpC r;
    r.re = a.re * b.re - a.im * b.im;
    r.im = a.re * b.im + a.im * b.re;
    return r;
}

double log_mpf(const mpf_class& v) {
    long e = 0;
    const double m = mpf_get_d_2exp(&e, v.get_mpf_t());
    return std::log(m) + static_cast<double>(e) * std::log(2.0);
}

}  // namespace

CovarianceLogDet covariance_logdet_circle(int N, double rho, bool want_matrix) {
    require_radius(rho);
    if (N < 0) throw std::invalid_argument("N must be >= 0");
    CovarianceLogDet out;

    const auto lg = lgamma_table(N);
    double logc_sum = 0;
    for (int k = 0; k <= N; ++k) logc_sum += lg[N] - lg[k] - lg[N - k];
    double pair_sum = 0;  // 2 sum_{j<k} log|xi_j - xi_k|
    for (int d = 1; d <= N; ++d)
        pair_sum += 2.0 * (N + 1 - d) *
                    std::log(2 * rho * std::sin(M_PI * d / (N + 1.0)));
    out.via_product = logc_sum + pair_sum;
    out.lattice_q = lattice_log_sum(1, N, rho).value;
    out.identity_residual =
        out.via_product - out.lattice_q - (N + 1.0) * std::log(N + 1.0);

    if (want_matrix && N <= 40) {
        const int n = N + 1;
        const mpf_class pi = hp_pi();
        std::vector<HpC> xi(n);
        for (int j = 0; j < n; ++j) {
            mpf_class t = mpf_class(j, kPrec) / n;
            if (t > mpf_class(0.5, kPrec)) t -= 1;
            mpf_class s, c;
            hp_sincos(2 * pi * t, s, c);
            xi[j].re = hp(rho) * c;
            xi[j].im = hp(rho) * s;
        }
        // A_{jk} = (1 + xi_j * conj(xi_k))^N, Hermitian positive definite.
        std::vector<HpC> A(static_cast<size_t>(n) * n);
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                HpC base;
                base.re = 1 + (xi[j].re * xi[k].re + xi[j].im * xi[k].im);
                base.im = xi[j].im * xi[k].re - xi[j].re * xi[k].im;
                HpC acc;
                acc.re = 1;
                for (int e = 0; e < N; ++e) acc = mul(acc, base);
                A[static_cast<size_t>(j) * n + k] = acc;
            }
        }
        // Cholesky, accumulating log of the real positive pivots.
        std::vector<HpC> L(static_cast<size_t>(n) * n);
        double logdet = 0;
        for (int j = 0; j < n; ++j) {
            mpf_class d = A[static_cast<size_t>(j) * n + j].re;
            for (int k = 0; k < j; ++k) {
                const HpC& v = L[static_cast<size_t>(j) * n + k];
                d -= v.re * v.re + v.im * v.im;
            }
            if (d <= 0) throw std::runtime_error("covariance matrix lost definiteness");
            mpf_class piv(0, kPrec);
            mpf_sqrt(piv.get_mpf_t(), d.get_mpf_t());
            logdet += 2 * log_mpf(piv);
            L[static_cast<size_t>(j) * n + j].re = piv;
            for (int i = j + 1; i < n; ++i) {
                HpC acc = A[static_cast<size_t>(i) * n + j];
                for (int k = 0; k < j; ++k) {
                    const HpC& a = L[static_cast<size_t>(i) * n + k];
                    const HpC& b = L[static_cast<size_t>(j) * n + k];
                    acc.re -= a.re * b.re + a.im * b.im;
                    acc.im -= a.im * b.re - a.re * b.im;
                }
                L[static_cast<size_t>(i) * n + j].re = acc.re / piv;
                L[static_cast<size_t>(i) * n + j].im = acc.im / piv;
            }
        }
        out.via_matrix = logdet;
    }
    return out;
}

}  // namespace holelab::rates
