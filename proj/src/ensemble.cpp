#include "holelab/ensemble.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "holelab/rng.hpp"

namespace holelab::ensemble {

Complex gaussian_at(std::uint64_t master_seed, std::uint64_t trial, std::uint64_t rank) {
    const rng::U128 bits = rng::threefry2x64(master_seed, trial, rank, 0);
    const double u1 = rng::uniform_pos(bits.lo);
    const double u2 = rng::uniform(bits.hi);
    const double radius = std::sqrt(-std::log(u1));
    return Complex(radius * std::cos(2 * M_PI * u2), radius * std::sin(2 * M_PI * u2));
}

GaussianPolynomial sample(int m, int N, std::uint64_t master_seed, std::uint64_t trial) {
    if (m < 1) throw std::invalid_argument("dimension m must be >= 1");
    if (N < 0) throw std::invalid_argument("degree N must be >= 0");
    GaussianPolynomial p;
    p.m = m;
    p.N = N;
    p.master_seed = master_seed;
    p.trial = trial;
    const long long count = indices::binom_ll(N + m, m);
    p.coeffs.resize(static_cast<size_t>(count));
    for (long long i = 0; i < count; ++i)
        p.coeffs[static_cast<size_t>(i)] =
            gaussian_at(master_seed, trial, static_cast<std::uint64_t>(i));
    return p;
}

std::vector<Complex> weighted_coefficients(const GaussianPolynomial& p) {
    if (p.m != 1) throw std::invalid_argument("weighted_coefficients: m = 1 only");
    std::vector<Complex> a(p.coeffs.size());
    double w = 1.0;  // sqrt(C(N,k)), updated by exact ratios
    for (int k = 0; k <= p.N; ++k) {
        a[k] = p.coeffs[k] * w;
        w *= std::sqrt(static_cast<double>(p.N - k) / (k + 1.0));
    }
    return a;
}

Complex evaluate(const GaussianPolynomial& p, Complex z) {
    return evaluate(p, std::vector<Complex>{z});
}

Complex evaluate(const GaussianPolynomial& p, const std::vector<Complex>& z) {
    if (static_cast<int>(z.size()) != p.m)
        throw std::invalid_argument("evaluate: point dimension mismatch");
    for (const Complex& zi : z)
        if (!std::isfinite(zi.real()) || !std::isfinite(zi.imag()))
            throw std::invalid_argument("evaluate: non-finite point");

    if (p.m == 1) {
        Complex sum = 0, w = 1;  // w = sqrt(C(N,k)) z^k
        for (int k = 0; k <= p.N; ++k) {
            sum += p.coeffs[k] * w;
            w *= z[0] * std::sqrt(static_cast<double>(p.N - k) / (k + 1.0));
        }
        return sum;
    }

    const auto lambda = indices::enumerate_multi(p.m, p.N);
    std::vector<double> lg(p.N + 1);
    for (int i = 0; i <= p.N; ++i) lg[i] = std::lgamma(i + 1.0);
    Complex sum = 0;
    for (size_t i = 0; i < lambda.size(); ++i) {
        const auto& K = lambda[i].k;
        double logc = lg[p.N];
        Complex zk = 1;
        int used = 0;
        for (int ax = 0; ax < p.m; ++ax) {
            logc -= lg[K[ax]];
            used += K[ax];
            for (int e = 0; e < K[ax]; ++e) zk *= z[ax];
        }
        logc -= lg[p.N - used];
        sum += p.coeffs[i] * std::exp(0.5 * logc) * zk;
    }
    return sum;
}

LogMagnitude evaluate_log(const GaussianPolynomial& p, Complex z) {
    if (p.m != 1) throw std::invalid_argument("evaluate_log: m = 1 only");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("evaluate_log: non-finite point");
    // Same recurrence as evaluate, but both the running monomial and the
    // partial sum are renormalized whenever they grow, with the shed scale
    // tracked additively in log space.
    Complex sum = 0, w = 1;
    double log_scale = 0;
    constexpr double kBig = 0x1p+500;
    constexpr double kShrink = 0x1p-500;
    constexpr double kLog = 500 * M_LN2;
    for (int k = 0; k <= p.N; ++k) {
        sum += p.coeffs[k] * w;
        w *= z * std::sqrt(static_cast<double>(p.N - k) / (k + 1.0));
        if (std::abs(w.real()) > kBig || std::abs(w.imag()) > kBig ||
            std::abs(sum.real()) > kBig || std::abs(sum.imag()) > kBig) {
            w *= kShrink;
            sum *= kShrink;
            log_scale += kLog;
        }
    }
    const double mag = std::abs(sum);
    LogMagnitude out;
    out.log_abs = mag > 0 ? std::log(mag) + log_scale
                          : -std::numeric_limits<double>::infinity();
    out.phase = std::arg(sum);
    return out;
}

HoleEventSpec hole_event_spec(int m, int N, double r) {
    if (m < 1 || N < 0) throw std::invalid_argument("bad ensemble parameters");
    if (!(r > 0)) throw std::invalid_argument("radius must be positive");
    const double logr = std::log(r);
    std::vector<double> lg(N + 1);
    for (int i = 0; i <= N; ++i) lg[i] = std::lgamma(i + 1.0);

    // log C(|K|+m-1, m-1), the weight-counting factor in the thresholds.
    auto log_count_of = [&](int used) {
        return std::lgamma(used + m + 0.0) - std::lgamma(used + 1.0) -
               std::lgamma(static_cast<double>(m));
    };

    HoleEventSpec spec;
    spec.m = m;
    spec.N = N;
    spec.r = r;
    spec.head_threshold = std::sqrt(static_cast<double>(N));
    std::function<void(int, int, double)> rec = [&](int axis, int used, double den) {
        if (axis == m) {
            if (used == 0) return;  // head coefficient is bounded below instead
            const double logc = lg[N] - lg[N - used] - den;  // log C(N,K)
            const double log_term = logc + 2.0 * used * logr;
            double log_t = -std::log(2.0) - 0.5 * std::log(static_cast<double>(N)) -
                           log_count_of(used);
            // Terms with C(N,K) r^{2|K|} >= 1 carry the weighted threshold.
            if (log_term >= 0) log_t -= 0.5 * logc + used * logr;
            spec.log_thresholds.push_back(log_t);
            return;
        }
        for (int k = 0; k + used <= N; ++k) rec(axis + 1, used + k, den + lg[k]);
    };
    rec(0, 0, 0.0);
    return spec;
}

EventProbability hole_lower_bound(int m, int N, double r) {
    const HoleEventSpec spec = hole_event_spec(m, N, r);

    // log gamma_N(|c| <= t) = log(1 - exp(-t^2)) for a standard complex
    // Gaussian; evaluated from log t to survive extreme thresholds.
    auto log_cap_prob = [](double log_t) {
        const double two = 2 * log_t;
        if (two < -36.0) return two;  // 1 - e^{-t^2} = t^2 (1 + O(t^2))
        const double t2 = std::exp(two);
        return std::log(-std::expm1(-t2));
    };

    double log_prob = -static_cast<double>(N);  // head factor
    for (double log_t : spec.log_thresholds) log_prob += log_cap_prob(log_t);

    EventProbability out;
    out.log_value = log_prob;
    out.value = std::exp(log_prob);
    return out;
}

}  // namespace holelab::ensemble
