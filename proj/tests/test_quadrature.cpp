#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "holelab/quadrature.hpp"

using namespace holelab;

TEST_CASE("adaptive panel on smooth and kinked integrands") {
    CHECK(quad::integrate([](double x) { return x * x; }, 0, 1, 1e-12) ==
          doctest::Approx(1.0 / 3).epsilon(1e-13));
    CHECK(quad::integrate([](double x) { return std::exp(-x); }, 0, 10, 1e-12) ==
          doctest::Approx(1 - std::exp(-10.0)).epsilon(1e-12));
    // x log x has a singular derivative at 0; integral is -1/4.
    CHECK(quad::integrate([](double x) { return x * std::log(x); }, 0, 1, 1e-11) ==
          doctest::Approx(-0.25).epsilon(1e-10));
    // |x - 1/3| kink inside the interval.
    const double kink =
        quad::integrate([](double x) { return std::fabs(x - 1.0 / 3); }, 0, 1, 1e-10);
    CHECK(kink == doctest::Approx((1.0 / 9 + 4.0 / 9) / 2).epsilon(1e-9));
}

TEST_CASE("budget exhaustion raises with the achieved estimate") {
    CHECK_THROWS_AS(
        quad::integrate([](double x) { return std::log(std::fabs(x) + 1e-300); }, -1, 1,
                        1e-13, 3),
        quad::convergence_error);
    try {
        quad::integrate([](double x) { return x > 0.5 ? 1.0 : 0.0; }, 0, 1, 1e-15, 2);
    } catch (const quad::convergence_error& e) {
        CHECK(std::isfinite(e.estimate));
        CHECK(e.achieved > 0);
    }
}

TEST_CASE("tanh-sinh handles endpoint log singularities") {
    CHECK(quad::tanh_sinh([](double x, double) { return std::log(x); }, 0, 1, 1e-12) ==
          doctest::Approx(-1.0).epsilon(1e-12));
    // Distance argument keeps the right endpoint accurate: log(1-x).  The
    // second argument is the distance to the nearer endpoint, so it stands in
    // for 1-x only on the right half.
    CHECK(quad::tanh_sinh(
              [](double x, double d) { return std::log(x <= 0.5 ? 1 - x : d); }, 0, 1,
              1e-12) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(quad::tanh_sinh([](double x, double) { return x * x; }, 0, 2, 1e-12) ==
          doctest::Approx(8.0 / 3).epsilon(1e-12));
    // 1/sqrt(x), integrable algebraic singularity.
    CHECK(quad::tanh_sinh([](double x, double) { return 1 / std::sqrt(x); }, 0, 1,
                          1e-11) == doctest::Approx(2.0).epsilon(1e-10));
}
