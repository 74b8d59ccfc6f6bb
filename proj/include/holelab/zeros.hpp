#pragma once

#include <complex>
#include <vector>

#include "holelab/ensemble.hpp"

namespace holelab::zeros {

using Complex = std::complex<double>;

struct RootSet {
    std::vector<Complex> roots;   // one entry per zero, multiplicity = repetition
    int degree_effective = 0;     // largest k with a nonzero coefficient
    double residual = 0;          // max |p(root)| / (|p'(root)| (1 + |root|))
};

struct ZeroCount {
    int inside = 0;          // zeros with |root| <= r (+tolerance band)
    int boundary_flags = 0;  // zeros with ||root| - r| < tol, also counted inside
};

struct ZeroWitness {
    bool has_zero = false;
    std::vector<Complex> witness;   // a point where the polynomial nearly vanishes
    double value_at_witness = 0;    // |s(witness)|
    int grid_res = 0;               // 0 for the exact one-variable route
};

/// All roots of sum_k a_k z^k (monomial coefficients as given).  Companion
/// matrix eigenvalues, balanced, then polished by simultaneous Newton
/// (Aberth-Ehrlich) sweeps.
RootSet roots_of_coefficients(std::vector<Complex> a);

/// Roots of a one-variable ensemble draw (weights applied internally).
RootSet find_roots(const ensemble::GaussianPolynomial& p);

/// Zeros with modulus <= r counting multiplicity.  Roots within tol of the
/// circle are counted inside and flagged.  tol <= 0 selects the default
/// 1e-9 * r.
ZeroCount count_zeros_in_disc(const ensemble::GaussianPolynomial& p, double r,
                              double tol = -1);
ZeroCount count_zeros_in_disc(const RootSet& roots, double r, double tol);

/// Independent count by winding of the boundary curve (argument principle),
/// with adaptive angular refinement.  Throws if the contour passes too close
/// to a zero to resolve.
int argument_principle_count(const ensemble::GaussianPolynomial& p, double r);

/// | circle mean of log|s| - log|c_0| - sum_{|root|<=r} log(r/|root|) |
/// over M equispaced boundary nodes.  Requires s(0) != 0 and no root within
/// the boundary tolerance of the circle.
double jensen_residual(const ensemble::GaussianPolynomial& p, double r, int M);

/// Zero search on the closed polydisc of radius r.  m = 1 is exact via root
/// counting.  m = 2 scans z2 over a grid_res x grid_res polar grid, root-solves
/// each z1 slice, and re-verifies candidates by direct evaluation; a true
/// answer is certified by the returned witness, a false answer is resolution
/// limited (never the other way around).  Grids nest when grid_res divides
/// the finer resolution, so certified hits persist along such refinements.
ZeroWitness polydisc_zero_search(const ensemble::GaussianPolynomial& p, double r,
                                 int grid_res = 16);

/// Greedy clustering of a root list at the given radius; returns
/// (center, multiplicity) pairs.
std::vector<std::pair<Complex, int>> cluster_roots(const std::vector<Complex>& roots,
                                                   double radius);

}  // namespace holelab::zeros
