#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "holelab/rates.hpp"

using namespace holelab;
using rates::SimplexPoint;

TEST_CASE("rate function values") {
    CHECK(rates::energy(1, 2.5, SimplexPoint{{0.0}}) == 0.0);
    CHECK(rates::energy(3, 0.7, SimplexPoint{{0, 0, 0}}) == 0.0);
    CHECK(rates::energy(1, 1.0, SimplexPoint{{0.5}}) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(rates::energy(1, 3.0, SimplexPoint{{1.0}}) ==
          doctest::Approx(2 * std::log(3.0)).epsilon(1e-14));
    CHECK_THROWS_AS(rates::energy(1, -1, SimplexPoint{{0.5}}), std::invalid_argument);
    CHECK_THROWS_AS(rates::energy(2, 1, SimplexPoint{{0.7, 0.7}}),
                    std::invalid_argument);
}

TEST_CASE("closed simplex integral") {
    CHECK(rates::simplex_integral_closed(1, 1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(rates::simplex_integral_closed(2, 1) ==
          doctest::Approx(5.0 / 12).epsilon(1e-15));
    CHECK(rates::simplex_integral_closed(1, std::exp(1.0)) ==
          doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("quadrature cross-check of the simplex integral") {
    for (int m = 1; m <= 3; ++m) {
        for (double r : {0.5, 1.0, 2.0, 5.0}) {
            const double closed = rates::simplex_integral_closed(m, r);
            const double tol = m == 1 ? 1e-10 : 1e-8;
            CHECK(std::fabs(rates::simplex_integral_quadrature(m, r, tol) - closed) <=
                  tol);
        }
    }
    CHECK_THROWS_AS(rates::simplex_integral_quadrature(4, 1, 1e-8),
                    std::invalid_argument);
}

TEST_CASE("alpha0 branches and residual") {
    CHECK(rates::alpha0(1, 1.2) == 1.0);
    CHECK(rates::alpha0(2, std::exp(-0.25)) == 1.0);  // threshold exactly zero
    CHECK(rates::alpha0(1, 0.5) == doctest::Approx(0.5).epsilon(1e-13));

    for (int m : {1, 2, 3}) {
        for (double r : {0.1, 0.3, 0.5, 0.7}) {
            const double a = rates::alpha0(m, r);
            if (a == 1.0) continue;
            const double c = 2 * std::log(r) + rates::harmonic_tail(2, m);
            const double resid =
                c * a - a * std::log(a) - (1 - a) * std::log1p(-a);
            CHECK(std::fabs(resid) < 1e-12);
        }
    }
}

TEST_CASE("truncated integral matches the full simplex value at alpha = 1") {
    for (int m : {1, 2, 3}) {
        for (double r : {0.5, 1.0, 2.0}) {
            CHECK(rates::truncated_integral(m, r, 1.0).value ==
                  doctest::Approx(rates::simplex_integral_closed(m, r)).epsilon(1e-10));
        }
    }
    CHECK_THROWS_AS(rates::truncated_integral(1, 1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(rates::truncated_integral(1, 1, 1.5), std::invalid_argument);
}

TEST_CASE("derivative vanishes at the maximizer; value matches the closed form") {
    for (int m : {1, 2, 3}) {
        for (double r : {0.3, 0.7}) {
            const double a = rates::alpha0(m, r);
            const auto at_max = rates::truncated_integral(m, r, a);
            if (a < 1.0) CHECK(std::fabs(at_max.derivative) < 1e-10);
            CHECK(at_max.value ==
                  doctest::Approx(rates::truncated_max_closed(m, r)).epsilon(1e-9));
        }
    }
}

TEST_CASE("maximizer wins over a grid of truncation levels") {
    for (int m : {1, 2}) {
        for (double r : {0.3, 0.7, 1.0, 2.0}) {
            const double a0 = rates::alpha0(m, r);
            const double best = rates::truncated_integral(m, r, a0).value;
            double grid_best = -1e300, grid_arg = 0;
            for (int i = 1; i <= 1000; ++i) {
                const double a = i / 1000.0;
                const double v = rates::truncated_integral(m, r, a).value;
                if (v > grid_best) {
                    grid_best = v;
                    grid_arg = a;
                }
            }
            CHECK(best >= grid_best - 1e-9);
            CHECK(std::fabs(grid_arg - a0) <= 1.0 / 1000 + 1e-12);
        }
    }
}

TEST_CASE("rate report, one dimension") {
    const auto at_one = rates::hole_rate(1, 1.0);
    CHECK(*at_one.one_d_rate == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(at_one.alpha0 == 1.0);

    for (double r : {1.0, 1.5, 2.0, 4.0}) {
        const auto rep = rates::hole_rate(1, r);
        CHECK(*rep.one_d_rate ==
              doctest::Approx(std::log(r) + 0.5).epsilon(1e-12));
        CHECK(*rep.restricted_integral ==
              doctest::Approx(rep.simplex_integral).epsilon(1e-12));
    }

    const auto half = rates::hole_rate(1, 0.5);
    CHECK(*half.one_d_rate ==
          doctest::Approx(0.25 * (1 + std::log(0.5))).epsilon(1e-12));
    CHECK(*half.restricted_integral == doctest::Approx(*half.one_d_rate).epsilon(1e-8));
    CHECK(half.upper_constant == doctest::Approx(*half.one_d_rate).epsilon(1e-8));

    // Larger disc, larger decay constant.
    double prev = -1e300;
    for (double r : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        const double c = *rates::hole_rate(1, r).one_d_rate;
        CHECK(c > prev);
        prev = c;
    }
}

TEST_CASE("rate report in higher dimension") {
    const auto rep2 = rates::hole_rate(2, 1.0);
    CHECK(rep2.simplex_integral == doctest::Approx(5.0 / 12).epsilon(1e-12));
    CHECK(rep2.alpha0 == 1.0);
    REQUIRE(rep2.restricted_integral.has_value());
    CHECK(*rep2.restricted_integral == doctest::Approx(5.0 / 12).epsilon(1e-9));

    const auto rep2small = rates::hole_rate(2, 0.5);
    REQUIRE(rep2small.restricted_integral.has_value());
    CHECK(*rep2small.restricted_integral >= 0);
    CHECK(*rep2small.restricted_integral >= rep2small.upper_constant - 1e-6);

    const auto rep5 = rates::hole_rate(5, 0.8);
    CHECK_FALSE(rep5.restricted_integral.has_value());
    CHECK(rep5.upper_constant ==
          doctest::Approx(rates::truncated_integral(5, 0.8, rep5.alpha0).value));
}

TEST_CASE("conformal upper constant") {
    CHECK(rates::conformal_upper_constant(1.0) == doctest::Approx(0.5));
    CHECK(rates::conformal_upper_constant(std::exp(-0.5)) ==
          doctest::Approx(0.0).epsilon(1e-14));
    for (double r : {1.0, 1.7, 3.0})
        CHECK(rates::conformal_upper_constant(r) ==
              doctest::Approx(*rates::hole_rate(1, r).one_d_rate).epsilon(1e-12));
    CHECK_THROWS_AS(rates::conformal_upper_constant(0.0), std::invalid_argument);
}

TEST_CASE("lattice sums, explicit values") {
    const auto trivial = rates::lattice_log_sum(1, 1, 1.0);
    CHECK(trivial.value == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(trivial.term_count == 2);

    const auto three = rates::lattice_log_sum(1, 2, 2.0);
    CHECK(three.value == doctest::Approx(std::log(128.0)).epsilon(1e-13));
    CHECK(three.term_count == 3);

    const auto tiny = rates::lattice_log_sum_positive(1, 2, 0.1);
    CHECK(tiny.value == 0.0);
    CHECK(tiny.term_count == 1);
}

TEST_CASE("positive-part sum equals the full sum exactly when r >= 1") {
    for (int m : {1, 2}) {
        for (int N : {1, 5, 17}) {
            for (double r : {1.0, 1.3, 2.0}) {
                const auto q = rates::lattice_log_sum(m, N, r);
                const auto rr = rates::lattice_log_sum_positive(m, N, r);
                CHECK(rr.value == q.value);
                CHECK(rr.term_count == q.term_count);
            }
            const auto q = rates::lattice_log_sum(m, N, 0.6);
            const auto rr = rates::lattice_log_sum_positive(m, N, 0.6);
            CHECK(rr.value >= q.value);  // dropped terms are negative
            CHECK(rr.term_count <= q.term_count);
        }
    }
}

TEST_CASE("lattice sum agrees with the exact-integer route") {
    for (int m : {1, 2}) {
        for (int N : {7, 40, 120}) {
            for (double r : {0.5, 1.0, 1.5}) {
                const auto fast = rates::lattice_log_sum(m, N, r);
                const auto slow = rates::lattice_log_sum_exact(m, N, r);
                CHECK(fast.term_count == slow.term_count);
                CHECK(fast.value ==
                      doctest::Approx(slow.value)
                          .epsilon(1e-11 * std::max(1.0, std::fabs(slow.value))));
            }
        }
    }
}

TEST_CASE("truncated lattice sum term counts") {
    const auto qa = rates::lattice_log_sum(2, 10, 1.0, 0.5);
    CHECK(qa.term_count == 21);  // binom(5+2, 2)
    const auto full = rates::lattice_log_sum(2, 10, 1.0, 1.0);
    CHECK(full.term_count == 66);
    CHECK(qa.value < full.value);
}

TEST_CASE("scaled lattice sums approach the simplex integral") {
    double prev_gap = 1e300;
    for (int N : {250, 500, 1000, 2000}) {
        const double v = rates::lattice_log_sum(1, N, 1.0).value /
                         (static_cast<double>(N) * N);
        const double gap = std::fabs(v - 0.5);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap < 0.02);

    const double r_scaled = rates::lattice_log_sum_positive(1, 1500, 0.5).value /
                            (1500.0 * 1500.0);
    CHECK(std::fabs(r_scaled - *rates::hole_rate(1, 0.5).one_d_rate) < 0.02);
}

TEST_CASE("log-sine moments") {
    const auto m0 = rates::log_sine_moment(0, 1e-9);
    CHECK(std::fabs(m0.value) < 1e-9);
    const auto m1 = rates::log_sine_moment(1, 1e-9);
    CHECK(std::fabs(m1.value) < 1e-9);

    // Independent oracle for the weight-2 and weight-3 moments: expanding the
    // log-sine kernel in cosines gives -zeta(3)/(2 pi^2) and -3 zeta(3)/(4 pi^2)
    // for the raw integrals.
    double zeta3 = 0;
    for (long n = 2000000; n >= 1; --n) zeta3 += 1.0 / (static_cast<double>(n) * n * n);
    const auto m2 = rates::log_sine_moment(2, 1e-10);
    CHECK(m2.value == doctest::Approx(-zeta3 / (2 * M_PI * M_PI)).epsilon(1e-9));
    const auto m3 = rates::log_sine_moment(3, 1e-10);
    CHECK(m3.value ==
          doctest::Approx(-3 * zeta3 / (4 * M_PI * M_PI) / 2).epsilon(1e-9));

    for (int m = 1; m <= 5; ++m) {
        const auto v = rates::log_sine_moment(m, 1e-8);
        CHECK(std::isfinite(v.value));
        CHECK(std::fabs(v.scheme_split - v.scheme_tanh_sinh) <= 1e-8);
    }
}

TEST_CASE("covariance log-determinant on the circle") {
    const auto n0 = rates::covariance_logdet_circle(0, 0.7);
    CHECK(n0.via_product == doctest::Approx(0.0).epsilon(1e-14));
    REQUIRE(n0.via_matrix.has_value());
    CHECK(*n0.via_matrix == doctest::Approx(0.0).epsilon(1e-14));

    for (double rho : {0.5, 0.9, 1.3}) {
        const auto n1 = rates::covariance_logdet_circle(1, rho);
        CHECK(n1.via_product ==
              doctest::Approx(std::log(4.0) + 2 * std::log(rho)).epsilon(1e-12));
        REQUIRE(n1.via_matrix.has_value());
        CHECK(*n1.via_matrix == doctest::Approx(n1.via_product).epsilon(1e-12));
    }

    for (int N : {50, 100, 200}) {
        for (double rho : {0.5, 0.9}) {
            const auto res = rates::covariance_logdet_circle(N, rho, false);
            const double scale = (N + 1.0) * std::log(N + 1.0);
            CHECK(std::fabs(res.identity_residual) < 1e-6 * scale);
            CHECK_FALSE(res.via_matrix.has_value());  // beyond the matrix cap
        }
    }

    for (int N : {10, 25, 40}) {
        for (double rho : {0.5, 0.9}) {
            const auto res = rates::covariance_logdet_circle(N, rho);
            REQUIRE(res.via_matrix.has_value());
            CHECK(std::fabs(*res.via_matrix - res.via_product) <
                  1e-6 * std::max(1.0, std::fabs(res.via_product)));
        }
    }
}
