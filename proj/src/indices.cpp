#include "holelab/indices.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace holelab::indices {

int MultiIndex::weight() const {
    return std::accumulate(k.begin(), k.end(), 0);
}

long long binom_ll(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        // r * (n-k+i) stays exact: multiply before divide, divisor i always divides.
        if (r > (std::numeric_limits<long long>::max)() / (n - k + i))
            throw std::overflow_error("binom_ll: overflow at n=" + std::to_string(n));
        r = r * (n - k + i) / i;
    }
    return r;
}

static void check_dims(int m, int N) {
    if (m < 1) throw std::invalid_argument("dimension m must be >= 1");
    if (N < 0) throw std::invalid_argument("degree N must be >= 0");
}

std::vector<MultiIndex> enumerate_multi(int m, int N) {
    check_dims(m, N);
    std::vector<MultiIndex> out;
    out.reserve(static_cast<size_t>(binom_ll(N + m, m)));
    std::vector<int> cur(m, 0);
    // Lexicographic successor with the total-degree budget: advance the last
    // coordinate while the remaining budget allows, else carry.
    while (true) {
        out.push_back(MultiIndex{cur});
        int used = std::accumulate(cur.begin(), cur.end(), 0);
        if (used < N) {
            ++cur[m - 1];
            continue;
        }
        int i = m - 1;
        while (i >= 0 && cur[i] == 0) --i;
        if (i <= 0) break;
        cur[i] = 0;
        ++cur[i - 1];
    }
    return out;
}

std::vector<OrderedIndex> enumerate_ordered(int m, int N) {
    check_dims(m, N);
    std::vector<OrderedIndex> out;
    out.reserve(static_cast<size_t>(binom_ll(N + m, m)));
    std::vector<int> cur(m, 0);
    while (true) {
        out.push_back(OrderedIndex{cur});
        if (cur[m - 1] < N) {
            ++cur[m - 1];
            continue;
        }
        int i = m - 1;
        while (i >= 0 && cur[i] == N) --i;
        if (i < 0) break;
        int v = cur[i] + 1;
        for (int t = i; t < m; ++t) cur[t] = v;
    }
    return out;
}

long long ordered_slice_count(int m, int N, int axis, int value) {
    check_dims(m, N);
    if (axis < 1 || axis > m) throw std::invalid_argument("axis out of range");
    if (value < 0 || value > N) throw std::invalid_argument("value out of range");
    return binom_ll(value + axis - 1, axis - 1) * binom_ll(N - value + m - axis, m - axis);
}

MultiIndex ordered_to_multi(const OrderedIndex& J) {
    const auto& j = J.j;
    if (j.empty()) throw std::invalid_argument("empty tuple");
    std::vector<int> k(j.size());
    int prev = 0;
    for (size_t i = 0; i < j.size(); ++i) {
        if (j[i] < prev) throw std::invalid_argument("tuple is not non-decreasing");
        k[i] = j[i] - prev;
        prev = j[i];
    }
    return MultiIndex{std::move(k)};
}

InterleavedAssignment interleaved_assignment(int N, int p) {
    if (N < 0) throw std::invalid_argument("degree N must be >= 0");
    if (p < 1 || p > N + 1) throw std::invalid_argument("block count p must be in [1, N+1]");
    InterleavedAssignment a;
    a.N = N;
    a.p = p;
    a.q = (static_cast<long long>(N) + 1) / p;
    a.l = (static_cast<long long>(N) + 1) % p;
    a.anchors.resize(p);
    a.block_of.resize(N + 1);
    a.tau.resize(N + 1);
    for (int t = 0; t < p; ++t)
        a.anchors[t] = static_cast<int>(t * a.q + std::min<long long>(t, a.l));
    for (int t = 0; t < p; ++t) {
        int lo = a.anchors[t];
        int hi = (t + 1 < p) ? a.anchors[t + 1] : N + 1;
        for (int j = lo; j < hi; ++j) {
            a.block_of[j] = t;
            a.tau[j] = (j - lo) * p + t;
        }
    }
    return a;
}

bool InterleavedAssignment::is_permutation() const {
    std::vector<char> seen(tau.size(), 0);
    for (int v : tau) {
        if (v < 0 || v >= static_cast<int>(tau.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

long long InterleavedAssignment::displacement(int j) const {
    if (j < 0 || j > N) throw std::invalid_argument("index out of range");
    long long t = block_of[j];
    return std::llabs(static_cast<long long>(tau[j]) - static_cast<long long>(p) * j +
                      t * (static_cast<long long>(N) + 1));
}

}  // namespace holelab::indices
