#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "mz/quadrature.hpp"

using namespace mz;
using std::numbers::pi;

TEST_CASE("polynomials and smooth integrands") {
    auto cube = [](double x) { return x * x * x; };
    CHECK(integrate<double>(cube, 0.0, 2.0) == doctest::Approx(4.0).epsilon(1e-14));

    auto gauss = [](double x) { return std::exp(-x * x); };
    CHECK(integrate<double>(gauss, -8.0, 8.0, {.rel_tol = 1e-12}) ==
          doctest::Approx(std::sqrt(pi)).epsilon(1e-13));
}

TEST_CASE("complex integrand") {
    auto osc = [](double x) { return std::exp(std::complex<double>{0.0, 3.0 * x}); };
    const auto v = integrate<std::complex<double>>(osc, 0.0, 1.0, {.rel_tol = 1e-12});
    const std::complex<double> want =
        (std::exp(std::complex<double>{0.0, 3.0}) - 1.0) / std::complex<double>{0.0, 3.0};
    CHECK(std::abs(v - want) <= 1e-13);
}

TEST_CASE("kinked absolute-value integrand converges") {
    auto f = [](double x) { return std::abs(std::sin(8.0 * x)); };
    const double v = integrate<double>(f, 0.0, pi, {.rel_tol = 1e-9, .max_depth = 40});
    CHECK(v == doctest::Approx(2.0).epsilon(1e-8));  // 8 lobes, each of area 1/4

}

TEST_CASE("segments helper and degenerate interval") {
    auto one = [](double) { return 1.0; };
    CHECK(integrate_segments<double>(one, {0.0, 0.5, 2.0}) == doctest::Approx(2.0));
    CHECK(integrate<double>(one, 1.0, 1.0) == 0.0);
    CHECK_THROWS_AS(integrate<double>(one, 2.0, 1.0), std::invalid_argument);
}
