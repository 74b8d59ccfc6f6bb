#pragma once

#include <cstdint>
#include <vector>

namespace holelab::indices {

/// Exponent tuple (k_1,...,k_m), all entries >= 0.  Member of the
/// degree-bounded family for N when weight() <= N.
struct MultiIndex {
    std::vector<int> k;

    int dim() const { return static_cast<int>(k.size()); }
    int weight() const;

    bool operator==(const MultiIndex&) const = default;
};

/// Non-decreasing tuple 0 <= j_1 <= ... <= j_m <= N.
struct OrderedIndex {
    std::vector<int> j;

    int dim() const { return static_cast<int>(j.size()); }

    bool operator==(const OrderedIndex&) const = default;
};

/// Interleaved assignment of N+1 slots to p blocks: block t covers the
/// contiguous index range [anchor[t], anchor[t+1]), and tau spreads each
/// block across {0,...,N} with stride p.
struct InterleavedAssignment {
    int N = 0;
    int p = 1;
    long long q = 0;  // (N+1) / p
    long long l = 0;  // (N+1) % p
    std::vector<int> anchors;      // a_t, size p
    std::vector<int> block_of;     // t such that j is in block t, size N+1
    std::vector<int> tau;          // permutation of {0,...,N}, size N+1

    bool is_permutation() const;
    /// |tau(j) - p*j + t*(N+1)| for the block t containing j.
    long long displacement(int j) const;
};

/// All multi-indices with total degree <= N, ascending lexicographic order.
/// Size binom(N+m, m).
std::vector<MultiIndex> enumerate_multi(int m, int N);

/// All non-decreasing tuples in [0,N]^m, ascending lexicographic order.
/// Size binom(N+m, m).
std::vector<OrderedIndex> enumerate_ordered(int m, int N);

/// Number of ordered tuples with j_axis == value:
/// binom(value+axis-1, axis-1) * binom(N-value+m-axis, m-axis).
/// axis is 1-based.
long long ordered_slice_count(int m, int N, int axis, int value);

/// The consecutive-difference map (j_1, j_2-j_1, ..., j_m - j_{m-1}).
/// Bijection from ordered tuples onto multi-indices of the same (m, N).
MultiIndex ordered_to_multi(const OrderedIndex& J);

/// Build the stride-p interleaving of {0,...,N}.  Requires 1 <= p <= N+1.
InterleavedAssignment interleaved_assignment(int N, int p);

/// binom(n, k) in a 64-bit integer; throws on overflow.
long long binom_ll(long long n, long long k);

}  // namespace holelab::indices
