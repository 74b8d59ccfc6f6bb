#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <vector>

#include "holelab/indices.hpp"

namespace holelab::exact {

using BigInt = mpz_class;

/// Raised when a requested instance exceeds a hard size limit.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Square matrix of exact integers, row-major.
struct BigMatrix {
    int dim = 0;
    std::vector<BigInt> a;

    BigMatrix() = default;
    explicit BigMatrix(int n) : dim(n), a(static_cast<size_t>(n) * n, 0) {}
    BigInt& at(int r, int c) { return a[static_cast<size_t>(r) * dim + c]; }
    const BigInt& at(int r, int c) const { return a[static_cast<size_t>(r) * dim + c]; }
};

/// Per-axis node values xi_{i,j}, i in [0,m), j in [0,N].
struct XiAssignment {
    std::vector<std::vector<long long>> values;

    int axes() const { return static_cast<int>(values.size()); }
};

/// Exact N! / ((N-|K|)! k_1! ... k_m!).  Requires |K| <= N.
BigInt multinomial(int N, const indices::MultiIndex& K);

/// The power matrix with rows indexed by ordered tuples, columns by
/// multi-indices (both in their enumeration order); entry = prod_i xi_{i, j_i}^{k_i}.
BigMatrix power_matrix(int m, int N, const XiAssignment& xi, int dim_limit = 2000);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt det(BigMatrix M);

/// Determinant of the power matrix.  dim_limit guards binom(N+m, m).
BigInt power_matrix_det(int m, int N, const XiAssignment& xi, int dim_limit = 2000);

struct DetProductReport {
    BigInt lhs;      // determinant
    BigInt rhs;      // product of pairwise differences with binomial exponents
    int sign = 0;    // lhs / rhs when both nonzero, else 0
    bool equal = false;          // |lhs| == |rhs|
    bool degree_identity = false;  // per-axis exponent sums match binom(N+m, m+1)
};

/// Check the closed product formula for the power-matrix determinant:
/// |det| = prod_i prod_{j<k} |xi_{i,j}-xi_{i,k}|^{C(j+i-1,i-1) C(N-k+m-i,m-i)},
/// plus the per-axis degree identity sum_{j<k} e(i,j,k) = binom(N+m, m+1).
DetProductReport verify_det_product(int m, int N, const XiAssignment& xi,
                                    int dim_limit = 2000);

struct LeadingCoefficient {
    int coefficient = 0;        // signed, |coefficient| == 1 expected
    long long matches = 0;      // bijections hitting the extremal monomial
    bool unique_match = false;
    bool matches_difference_map = false;  // the one match is ordered_to_multi
};

/// Coefficient of the extremal monomial prod_{i,k>=1} xi_{i,k}^{C(k+i-1,i) C(N-k+m-i,m-i)}
/// in the full expansion of the power-matrix determinant, by exhaustive
/// enumeration of all row->column bijections.  Requires binom(N+m,m) <= 8.
LeadingCoefficient leading_coefficient(int m, int N);

/// floor-free natural log of |v| (v != 0), accurate to ~1e-15 relative.
double log_abs(const BigInt& v);

}  // namespace holelab::exact
