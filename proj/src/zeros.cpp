#include "holelab/zeros.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace holelab::zeros {

namespace {

// Horner evaluation of p and p' at z.
void horner2(const std::vector<Complex>& a, Complex z, Complex& p, Complex& dp) {
    p = a.back();
    dp = 0;
    for (int k = static_cast<int>(a.size()) - 2; k >= 0; --k) {
        dp = dp * z + p;
        p = p * z + a[k];
    }
}

// Parlett-Reinsch style balancing with radix-2 scale factors.
void balance(Eigen::MatrixXcd& A) {
    const int n = static_cast<int>(A.rows());
    bool converged = false;
    auto mag1 = [](const Complex& v) { return std::fabs(v.real()) + std::fabs(v.imag()); };
    for (int pass = 0; pass < 6 && !converged; ++pass) {
        converged = true;
        for (int i = 0; i < n; ++i) {
            double c = 0, r = 0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                c += mag1(A(j, i));
                r += mag1(A(i, j));
            }
            if (c == 0 || r == 0) continue;
            double f = 1;
            const double s = c + r;
            while (c < r / 2) {
                c *= 2;
                r /= 2;
                f *= 2;
            }
            while (c >= r * 2) {
                c /= 2;
                r *= 2;
                f /= 2;
            }
            if ((c + r) < 0.95 * s && f != 1) {
                converged = false;
                A.col(i) *= f;
                A.row(i) /= f;
            }
        }
    }
}

// A few Aberth-Ehrlich sweeps; cubic near simple roots, harmless elsewhere.
// Eigenvalue starting points are already close, so this converges in one or
// two sweeps; clustered roots stall near the noise floor and time out.
void aberth_polish(const std::vector<Complex>& a, std::vector<Complex>& z) {
    const int d = static_cast<int>(z.size());
    double prev_worst = std::numeric_limits<double>::infinity();
    for (int sweep = 0; sweep < 16; ++sweep) {
        double worst = 0;
        for (int i = 0; i < d; ++i) {
            Complex p, dp;
            horner2(a, z[i], p, dp);
            if (p == Complex(0)) continue;
            if (dp == Complex(0)) {
                z[i] += 1e-12 * (1.0 + std::abs(z[i]));
                worst = 1;
                continue;
            }
            const Complex newton = p / dp;
            Complex repulsion = 0;
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                const Complex diff = z[i] - z[j];
                if (diff != Complex(0)) repulsion += 1.0 / diff;
            }
            const Complex denom = 1.0 - newton * repulsion;
            const Complex step = denom != Complex(0) ? newton / denom : newton;
            z[i] -= step;
            worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[i])));
        }
        // Simple roots hit the tolerance in a sweep or two.  Clusters around
        // a multiple root sit at the eps^(1/mult) noise floor already, where
        // further sweeps only shuffle the iterates, so a stalled ratio stops.
        if (worst < 1e-13 || (sweep > 3 && worst >= 0.5 * prev_worst)) break;
        prev_worst = worst;
    }
}

// Stable quadratic formula (the 2x2 companion spectrum in closed form).
std::pair<Complex, Complex> quadratic_roots(Complex c0, Complex c1, Complex c2) {
    const Complex disc = std::sqrt(c1 * c1 - 4.0 * c2 * c0);
    // Pick the sign that avoids cancellation in -c1 -+ disc.
    const Complex q = (std::real(std::conj(c1) * disc) >= 0) ? -0.5 * (c1 + disc)
                                                             : -0.5 * (c1 - disc);
    if (q == Complex(0)) return {Complex(0), Complex(0)};
    return {q / c2, c0 / q};
}

}  // namespace

RootSet roots_of_coefficients(std::vector<Complex> a) {
    // Effective degree: trim vanishing leading coefficients.
    int d = static_cast<int>(a.size()) - 1;
    while (d >= 0 && a[d] == Complex(0)) --d;
    if (d < 0) throw std::invalid_argument("roots: zero polynomial");
    a.resize(d + 1);

    RootSet out;
    out.degree_effective = d;
    if (d == 0) return out;

    // Exact zero roots come off first.
    int zero_roots = 0;
    while (zero_roots < d && a[zero_roots] == Complex(0)) ++zero_roots;
    std::vector<Complex> b(a.begin() + zero_roots, a.end());
    const int dd = static_cast<int>(b.size()) - 1;

    std::vector<Complex> roots;
    roots.reserve(d);
    roots.insert(roots.end(), zero_roots, Complex(0));

    if (dd == 1) {
        roots.push_back(-b[0] / b[1]);
    } else if (dd == 2) {
        auto [r0, r1] = quadratic_roots(b[0], b[1], b[2]);
        std::vector<Complex> z{r0, r1};
        aberth_polish(b, z);
        roots.insert(roots.end(), z.begin(), z.end());
    } else if (dd >= 2) {
        Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(dd, dd);
        for (int i = 1; i < dd; ++i) C(i, i - 1) = 1;
        for (int i = 0; i < dd; ++i) C(i, dd - 1) = -b[i] / b[dd];
        balance(C);
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
        if (es.info() != Eigen::Success)
            throw std::runtime_error("companion eigenvalue iteration failed");
        std::vector<Complex> z(dd);
        for (int i = 0; i < dd; ++i) z[i] = es.eigenvalues()(i);
        aberth_polish(b, z);
        roots.insert(roots.end(), z.begin(), z.end());
    }

    double worst = 0;
    for (const Complex& root : roots) {
        Complex p, dp;
        horner2(a, root, p, dp);
        const double denom = std::abs(dp) * (1.0 + std::abs(root)) + 1e-300;
        worst = std::max(worst, std::abs(p) / denom);
    }
    out.roots = std::move(roots);
    out.residual = worst;
    return out;
}

RootSet find_roots(const ensemble::GaussianPolynomial& p) {
    if (p.m != 1) throw std::invalid_argument("find_roots: m = 1 only");
    return roots_of_coefficients(ensemble::weighted_coefficients(p));
}

ZeroCount count_zeros_in_disc(const RootSet& rs, double r, double tol) {
    if (!(r > 0)) throw std::invalid_argument("radius must be positive");
    if (tol <= 0) tol = 1e-9 * r;
    ZeroCount out;
    for (const Complex& root : rs.roots) {
        const double rho = std::abs(root);
        if (std::fabs(rho - r) < tol) {
            ++out.boundary_flags;
            ++out.inside;  // boundary zeros count as inside, and are flagged
        } else if (rho < r) {
            ++out.inside;
        }
    }
    return out;
}

ZeroCount count_zeros_in_disc(const ensemble::GaussianPolynomial& p, double r,
                              double tol) {
    return count_zeros_in_disc(find_roots(p), r, tol);
}

int argument_principle_count(const ensemble::GaussianPolynomial& p, double r) {
    if (p.m != 1) throw std::invalid_argument("argument principle: m = 1 only");
    if (!(r > 0)) throw std::invalid_argument("radius must be positive");

    auto phase_at = [&](double theta) {
        const ensemble::LogMagnitude v =
            ensemble::evaluate_log(p, r * Complex(std::cos(theta), std::sin(theta)));
        if (!std::isfinite(v.log_abs))
            throw std::runtime_error("zero on the contour");
        return v.phase;
    };

    // Accumulate phase increments, bisecting any step that jumps >= pi/2.
    struct Seg {
        double t0, t1, ph0, ph1;
        int depth;
    };
    const int coarse = std::max(32, 4 * p.N);
    std::vector<Seg> stack;
    std::vector<double> grid(coarse + 1);
    for (int i = 0; i <= coarse; ++i) grid[i] = 2 * M_PI * i / coarse;
    double prev_phase = phase_at(grid[0]);
    const double first_phase = prev_phase;
    double total = 0;
    for (int i = 0; i < coarse; ++i) {
        const double next_phase =
            (i + 1 == coarse) ? first_phase : phase_at(grid[i + 1]);
        stack.push_back({grid[i], grid[i + 1], prev_phase, next_phase, 0});
        while (!stack.empty()) {
            const Seg s = stack.back();
            stack.pop_back();
            double d = s.ph1 - s.ph0;
            while (d > M_PI) d -= 2 * M_PI;
            while (d < -M_PI) d += 2 * M_PI;
            if (std::fabs(d) < M_PI / 2) {
                total += d;
                continue;
            }
            if (s.depth > 48)
                throw std::runtime_error("argument principle: refinement exhausted");
            const double tm = 0.5 * (s.t0 + s.t1);
            const double pm = phase_at(tm);
            stack.push_back({tm, s.t1, pm, s.ph1, s.depth + 1});
            stack.push_back({s.t0, tm, s.ph0, pm, s.depth + 1});
        }
        prev_phase = next_phase;
    }
    return static_cast<int>(std::lround(total / (2 * M_PI)));
}

double jensen_residual(const ensemble::GaussianPolynomial& p, double r, int M) {
    if (p.m != 1) throw std::invalid_argument("jensen_residual: m = 1 only");
    if (!(r > 0) || M < 1) throw std::invalid_argument("bad Jensen parameters");
    if (p.coeffs.empty() || p.coeffs[0] == Complex(0))
        throw std::invalid_argument("jensen_residual: requires s(0) != 0");

    const RootSet rs = find_roots(p);
    const double tol = 1e-9 * r;
    double rhs = std::log(std::abs(p.coeffs[0]));
    for (const Complex& root : rs.roots) {
        const double rho = std::abs(root);
        if (std::fabs(rho - r) < tol)
            throw std::invalid_argument("jensen_residual: root on the boundary band");
        if (rho < r) rhs += std::log(r / rho);
    }

    double lhs = 0;
    for (int j = 0; j < M; ++j) {
        const double theta = 2 * M_PI * j / M;
        lhs += ensemble::evaluate_log(p, r * Complex(std::cos(theta), std::sin(theta)))
                   .log_abs;
    }
    lhs /= M;
    return std::fabs(lhs - rhs);
}

std::vector<std::pair<Complex, int>> cluster_roots(const std::vector<Complex>& roots,
                                                   double radius) {
    std::vector<std::pair<Complex, int>> clusters;
    for (const Complex& root : roots) {
        bool placed = false;
        for (auto& [center, count] : clusters) {
            if (std::abs(root - center) <= radius) {
                center = (center * static_cast<double>(count) + root) /
                         static_cast<double>(count + 1);
                ++count;
                placed = true;
                break;
            }
        }
        if (!placed) clusters.emplace_back(root, 1);
    }
    return clusters;
}

ZeroWitness polydisc_zero_search(const ensemble::GaussianPolynomial& p, double r,
                                 int grid_res) {
    if (!(r > 0)) throw std::invalid_argument("radius must be positive");
    if (p.m == 1) {
        const RootSet rs = find_roots(p);
        ZeroWitness out;
        for (const Complex& root : rs.roots) {
            if (std::abs(root) <= r + 1e-9 * r) {
                out.has_zero = true;
                out.witness = {root};
                out.value_at_witness = std::abs(ensemble::evaluate(p, root));
                break;
            }
        }
        return out;
    }
    if (p.m != 2) throw std::invalid_argument("polydisc search supports m in {1,2}");
    if (grid_res < 8) throw std::invalid_argument("grid_res must be >= 8");

    const int N = p.N;
    std::vector<double> lg(N + 1);
    for (int i = 0; i <= N; ++i) lg[i] = std::lgamma(i + 1.0);
    // Row k1 of the lexicographic (k1, k2) layout starts here.
    auto block_start = [&](int k1) {
        return static_cast<size_t>(k1) * (N + 1) - static_cast<size_t>(k1) * (k1 - 1) / 2;
    };

    ZeroWitness out;
    out.grid_res = grid_res;
    std::vector<Complex> slice(N + 1);
    for (int s = 0; s < grid_res; ++s) {
        const double rho = r * (s + 1.0) / grid_res;
        for (int t = 0; t < grid_res; ++t) {
            const double theta = 2 * M_PI * t / grid_res;
            const Complex z2 = rho * Complex(std::cos(theta), std::sin(theta));
            // Coefficients of z1 for this z2 slice, weights folded in.
            double scale = 0;
            for (int k1 = 0; k1 <= N; ++k1) {
                Complex acc = 0;
                Complex z2pow = 1;
                for (int k2 = 0; k2 + k1 <= N; ++k2) {
                    const double logc =
                        lg[N] - lg[k1] - lg[k2] - lg[N - k1 - k2];
                    acc += p.coeffs[block_start(k1) + k2] * std::exp(0.5 * logc) * z2pow;
                    z2pow *= z2;
                }
                slice[k1] = acc;
                scale += std::abs(acc) * std::pow(r, k1);
            }
            RootSet rs;
            try {
                rs = roots_of_coefficients(slice);
            } catch (const std::invalid_argument&) {
                // Identically-zero slice: every point of it is a zero.
                out.has_zero = true;
                out.witness = {Complex(0), z2};
                out.value_at_witness = 0;
                return out;
            }
            for (const Complex& root : rs.roots) {
                if (std::abs(root) > r) continue;
                const double val =
                    std::abs(ensemble::evaluate(p, std::vector<Complex>{root, z2}));
                if (val < 1e-12 * std::max(scale, 1e-300)) {
                    out.has_zero = true;
                    out.witness = {root, z2};
                    out.value_at_witness = val;
                    return out;
                }
            }
        }
    }
    return out;
}

}  // namespace holelab::zeros
