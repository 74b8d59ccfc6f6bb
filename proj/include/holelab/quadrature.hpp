#pragma once

#include <functional>
#include <stdexcept>

namespace holelab::quad {

/// Raised when an adaptive scheme exhausts its budget; carries the best value.
struct convergence_error : std::runtime_error {
    double achieved;
    double estimate;
    convergence_error(const std::string& what, double est, double err)
        : std::runtime_error(what), achieved(err), estimate(est) {}
};

using Fn = std::function<double(double)>;

/// Adaptive bisection with a fixed-order Gauss-Legendre panel.  The error
/// estimate of a panel is |whole - (left + right)|; the tolerance budget is
/// halved per split so the partition tree (and the summation order) is
/// deterministic.  Throws convergence_error past max_depth.
double integrate(const Fn& f, double a, double b, double tol, int max_depth = 60);

/// Same, but returns the achieved estimate instead of throwing.
double integrate_lenient(const Fn& f, double a, double b, double tol, int max_depth = 60);

/// Tanh-sinh (double exponential) rule on (a, b); tolerates integrable
/// endpoint singularities such as log terms.  f takes (x, distance to the
/// nearer endpoint) so singular factors can be evaluated without cancellation.
double tanh_sinh(const std::function<double(double, double)>& f, double a, double b,
                 double tol);

}  // namespace holelab::quad
