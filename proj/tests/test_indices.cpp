#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <numeric>
#include <set>

#include "holelab/indices.hpp"

using namespace holelab::indices;

TEST_CASE("multi-index enumeration, explicit listings") {
    CHECK(enumerate_multi(1, 2) ==
          std::vector<MultiIndex>{{{0}}, {{1}}, {{2}}});
    CHECK(enumerate_multi(2, 1) ==
          std::vector<MultiIndex>{{{0, 0}}, {{0, 1}}, {{1, 0}}});
    CHECK(enumerate_multi(2, 2).size() == 6);
    CHECK(enumerate_multi(2, 2) ==
          std::vector<MultiIndex>{{{0, 0}}, {{0, 1}}, {{0, 2}}, {{1, 0}}, {{1, 1}},
                                  {{2, 0}}});
    CHECK_THROWS_AS(enumerate_multi(0, 2), std::invalid_argument);
}

TEST_CASE("ordered enumeration, explicit listings") {
    CHECK(enumerate_ordered(2, 1) ==
          std::vector<OrderedIndex>{{{0, 0}}, {{0, 1}}, {{1, 1}}});
    const auto ladder = enumerate_ordered(1, 5);
    REQUIRE(ladder.size() == 6);
    for (int i = 0; i <= 5; ++i) CHECK(ladder[i].j == std::vector<int>{i});
    CHECK(enumerate_ordered(3, 2).size() == 10);
    CHECK_THROWS_AS(enumerate_ordered(0, 1), std::invalid_argument);
}

TEST_CASE("both families have size binom(N+m, m) and are lex sorted") {
    for (int m = 1; m <= 4; ++m) {
        for (int N = 0; N <= 12; ++N) {
            const auto lam = enumerate_multi(m, N);
            const auto gam = enumerate_ordered(m, N);
            const auto expect = binom_ll(N + m, m);
            CHECK(static_cast<long long>(lam.size()) == expect);
            CHECK(static_cast<long long>(gam.size()) == expect);
            CHECK(std::is_sorted(lam.begin(), lam.end(),
                                 [](const MultiIndex& a, const MultiIndex& b) {
                                     return a.k < b.k;
                                 }));
            CHECK(std::is_sorted(gam.begin(), gam.end(),
                                 [](const OrderedIndex& a, const OrderedIndex& b) {
                                     return a.j < b.j;
                                 }));
        }
    }
}

TEST_CASE("slice counts") {
    // |{J in ordered(2,2) : j_1 = 0}| = |{(0,0),(0,1),(0,2)}| = 3
    CHECK(ordered_slice_count(2, 2, 1, 0) == 3);
    for (int k = 0; k <= 7; ++k) CHECK(ordered_slice_count(1, 7, 1, k) == 1);
    CHECK_THROWS_AS(ordered_slice_count(2, 2, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(ordered_slice_count(2, 2, 0, 0), std::invalid_argument);

    // Exhaustive cross-check against the enumeration for a small grid.
    for (int m = 1; m <= 3; ++m) {
        for (int N = 0; N <= 6; ++N) {
            const auto gam = enumerate_ordered(m, N);
            for (int axis = 1; axis <= m; ++axis) {
                for (int v = 0; v <= N; ++v) {
                    const long long direct = std::count_if(
                        gam.begin(), gam.end(),
                        [&](const OrderedIndex& J) { return J.j[axis - 1] == v; });
                    CHECK(ordered_slice_count(m, N, axis, v) == direct);
                }
            }
        }
    }
}

TEST_CASE("partition identity over the full grid") {
    for (int m = 1; m <= 5; ++m) {
        for (int N = 0; N <= 30; ++N) {
            for (int axis = 1; axis <= m; ++axis) {
                long long sum = 0;
                for (int v = 0; v <= N; ++v) sum += ordered_slice_count(m, N, axis, v);
                REQUIRE(sum == binom_ll(N + m, m));
            }
        }
    }
}

TEST_CASE("difference map examples and bijectivity") {
    CHECK(ordered_to_multi(OrderedIndex{{0, 0, 0}}).k == std::vector<int>{0, 0, 0});
    CHECK(ordered_to_multi(OrderedIndex{{1, 1}}).k == std::vector<int>{1, 0});
    CHECK_THROWS_AS(ordered_to_multi(OrderedIndex{{2, 1}}), std::invalid_argument);

    for (int m = 1; m <= 3; ++m) {
        for (int N = 0; N <= 8; ++N) {
            const auto gam = enumerate_ordered(m, N);
            const auto lam = enumerate_multi(m, N);
            std::set<std::vector<int>> image;
            for (const auto& J : gam) {
                const auto K = ordered_to_multi(J);
                CHECK(K.weight() <= N);
                image.insert(K.k);
            }
            CHECK(image.size() == gam.size());                        // injective
            for (const auto& K : lam) CHECK(image.count(K.k) == 1);   // onto
        }
    }
}

TEST_CASE("interleaved assignment examples") {
    const auto id = interleaved_assignment(7, 1);
    for (int j = 0; j <= 7; ++j) CHECK(id.tau[j] == j);
    CHECK(id.anchors == std::vector<int>{0});

    const auto a = interleaved_assignment(4, 2);
    CHECK(a.q == 2);
    CHECK(a.l == 1);
    CHECK(a.anchors == std::vector<int>{0, 3});
    CHECK(a.tau == std::vector<int>{0, 2, 4, 1, 3});

    CHECK_THROWS_AS(interleaved_assignment(4, 6), std::invalid_argument);
    CHECK_THROWS_AS(interleaved_assignment(4, 0), std::invalid_argument);
}

TEST_CASE("interleaving is a permutation with bounded displacement") {
    for (int p = 1; p <= 8; ++p) {
        for (int N : {0, 1, 7, 23, 64, 143, 200}) {
            if (p > N + 1) continue;
            const auto a = interleaved_assignment(N, p);
            REQUIRE(a.is_permutation());
            for (int j = 0; j <= N; ++j)
                REQUIRE(a.displacement(j) <= 2LL * p * p);
        }
    }
}

TEST_CASE("binom_ll basics") {
    CHECK(binom_ll(5, 2) == 10);
    CHECK(binom_ll(4, 2) == 6);
    CHECK(binom_ll(3, 5) == 0);
    CHECK(binom_ll(0, 0) == 1);
}
