#include "holelab/exact.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace holelab::exact {

using indices::MultiIndex;
using indices::OrderedIndex;

BigInt multinomial(int N, const MultiIndex& K) {
    const int w = K.weight();
    for (int ki : K.k)
        if (ki < 0) throw std::invalid_argument("multinomial: negative entry");
    if (w > N) throw std::invalid_argument("multinomial: |K| exceeds N");
    BigInt num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(N));
    BigInt den;
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(N - w));
    BigInt f;
    for (int ki : K.k) {
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(ki));
        den *= f;
    }
    return num / den;
}

static void check_xi_shape(int m, int N, const XiAssignment& xi) {
    if (xi.axes() != m) throw std::invalid_argument("xi: axis count mismatch");
    for (const auto& row : xi.values)
        if (static_cast<int>(row.size()) != N + 1)
            throw std::invalid_argument("xi: each axis needs N+1 values");
}

BigMatrix power_matrix(int m, int N, const XiAssignment& xi, int dim_limit) {
    check_xi_shape(m, N, xi);
    const long long n = indices::binom_ll(N + m, m);
    if (n > dim_limit)
        throw capacity_error("power matrix dimension " + std::to_string(n) +
                             " exceeds limit " + std::to_string(dim_limit));
    const auto rows = indices::enumerate_ordered(m, N);
    const auto cols = indices::enumerate_multi(m, N);
    BigMatrix M(static_cast<int>(n));
    BigInt p, t;
    for (int r = 0; r < M.dim; ++r) {
        for (int c = 0; c < M.dim; ++c) {
            p = 1;
            for (int i = 0; i < m; ++i) {
                const int e = cols[c].k[i];
                if (e == 0) continue;
                BigInt base(static_cast<long>(xi.values[i][rows[r].j[i]]));
                mpz_pow_ui(t.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
                p *= t;
            }
            M.at(r, c) = p;
        }
    }
    return M;
}

BigInt det(BigMatrix M) {
    const int n = M.dim;
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (M.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (M.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int c = k; c < n; ++c) std::swap(M.at(k, c), M.at(piv, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int c = k + 1; c < n; ++c) {
                BigInt v = M.at(k, k) * M.at(i, c) - M.at(i, k) * M.at(k, c);
                // Bareiss: division by the previous pivot is exact.
                mpz_divexact(M.at(i, c).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            M.at(i, k) = 0;
        }
        prev = M.at(k, k);
    }
    BigInt d = M.at(n - 1, n - 1);
    return sign > 0 ? d : BigInt(-d);
}

BigInt power_matrix_det(int m, int N, const XiAssignment& xi, int dim_limit) {
    return det(power_matrix(m, N, xi, dim_limit));
}

DetProductReport verify_det_product(int m, int N, const XiAssignment& xi, int dim_limit) {
    check_xi_shape(m, N, xi);
    DetProductReport rep;
    rep.lhs = power_matrix_det(m, N, xi, dim_limit);

    rep.rhs = 1;
    bool degree_ok = true;
    BigInt t;
    for (int i = 1; i <= m; ++i) {
        BigInt degree_sum = 0;
        for (int j = 0; j < N; ++j) {
            for (int k = j + 1; k <= N; ++k) {
                const long long e = indices::binom_ll(j + i - 1, i - 1) *
                                    indices::binom_ll(N - k + m - i, m - i);
                degree_sum += static_cast<long>(e);
                BigInt diff(static_cast<long>(xi.values[i - 1][j] - xi.values[i - 1][k]));
                mpz_pow_ui(t.get_mpz_t(), diff.get_mpz_t(), static_cast<unsigned long>(e));
                rep.rhs *= t;
            }
        }
        if (degree_sum != static_cast<long>(indices::binom_ll(N + m, m + 1))) degree_ok = false;
    }
    rep.degree_identity = degree_ok;

    BigInt abs_l = abs(rep.lhs), abs_r = abs(rep.rhs);
    rep.equal = (abs_l == abs_r);
    if (rep.lhs != 0 && rep.rhs != 0)
        rep.sign = (sgn(rep.lhs) == sgn(rep.rhs)) ? 1 : -1;
    return rep;
}

LeadingCoefficient leading_coefficient(int m, int N) {
    const long long n = indices::binom_ll(N + m, m);
    if (n > 8)
        throw capacity_error("exhaustive expansion limited to dimension 8, got " +
                             std::to_string(n));
    const auto rows = indices::enumerate_ordered(m, N);
    const auto cols = indices::enumerate_multi(m, N);

    // Target exponent of xi_{i,v}: C(v+i-1, i) * C(N-v+m-i, m-i) for v >= 1, 0 at v = 0.
    auto target = [&](int i, int v) -> long long {
        if (v == 0) return 0;
        return indices::binom_ll(v + i - 1, i) * indices::binom_ll(N - v + m - i, m - i);
    };

    // The column index the difference map sends each row to.
    std::vector<int> diff_map(n);
    for (long long r = 0; r < n; ++r) {
        const MultiIndex img = indices::ordered_to_multi(rows[r]);
        diff_map[r] = static_cast<int>(
            std::find(cols.begin(), cols.end(), img) - cols.begin());
    }

    LeadingCoefficient out;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<long long> expo(static_cast<size_t>(m) * (N + 1));
    do {
        std::fill(expo.begin(), expo.end(), 0);
        for (long long r = 0; r < n; ++r)
            for (int i = 0; i < m; ++i)
                expo[static_cast<size_t>(i) * (N + 1) + rows[r].j[i]] += cols[perm[r]].k[i];
        bool hit = true;
        for (int i = 1; i <= m && hit; ++i)
            for (int v = 0; v <= N; ++v)
                if (expo[static_cast<size_t>(i - 1) * (N + 1) + v] != target(i, v)) {
                    hit = false;
                    break;
                }
        if (!hit) continue;

        // Permutation sign by counting inversions.
        int sgn_p = 1;
        for (long long a = 0; a < n; ++a)
            for (long long b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) sgn_p = -sgn_p;
        out.coefficient += sgn_p;
        ++out.matches;
        if (std::equal(perm.begin(), perm.end(), diff_map.begin()))
            out.matches_difference_map = true;
    } while (std::next_permutation(perm.begin(), perm.end()));

    out.unique_match = (out.matches == 1);
    return out;
}

double log_abs(const BigInt& v) {
    if (v == 0) throw std::invalid_argument("log_abs: zero");
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

}  // namespace holelab::exact
