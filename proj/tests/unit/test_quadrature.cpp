#include <doctest.h>

#include <cmath>

#include "siteaddr/errors.hpp"
#include "siteaddr/quadrature.hpp"
#include "siteaddr/special.hpp"

#include "oracles.hpp"

using namespace siteaddr;

TEST_CASE("closed-form aperture normalization integral") {
  // int_0^R r exp(-r^2/w^2) dr = (w^2/2)(1 - exp(-R^2/w^2)), with R = 1, w = 2
  const auto f = [](double r) { return r * std::exp(-r * r / 4.0); };
  const double exact = 2.0 * (1.0 - std::exp(-0.25));
  const QuadratureResult q = integrate_adaptive(f, 0.0, 1.0, 1e-10);
  CHECK(q.value == doctest::Approx(exact).epsilon(1e-10));
  CHECK(q.error_estimate <= 1e-9 * std::abs(exact) + 1e-15);
}

TEST_CASE("oscillatory Bessel integrand against the Romberg oracle") {
  const auto f = [](double u) { return u * bessel_j0(12.0 * u) * std::exp(-u * u); };
  const double oracle = test::romberg(f, 0.0, 1.0, 1e-12);
  const QuadratureResult q = integrate_adaptive(f, 0.0, 1.0, 1e-10);
  CHECK(q.value == doctest::Approx(oracle).epsilon(1e-9));
}

TEST_CASE("tightening the tolerance changes the result by at most 10x tol") {
  const auto f = [](double u) { return u * bessel_j0(20.0 * u) * std::exp(-2.0 * u * u); };
  for (double tol : {1e-5, 1e-6, 1e-7}) {
    const double a = integrate_adaptive(f, 0.0, 1.0, tol).value;
    const double b = integrate_adaptive(f, 0.0, 1.0, tol / 10.0).value;
    CHECK(std::abs(a - b) <= 10.0 * tol * std::abs(b));
  }
}

TEST_CASE("panel budget exhaustion raises numeric_error with the achieved estimate") {
  // integrand with a kink cluster that a 3-panel budget cannot resolve
  const auto f = [](double x) { return std::sqrt(std::abs(x - 0.3141)); };
  try {
    integrate_adaptive(f, 0.0, 1.0, 1e-14, 1e-300, 3);
    FAIL("expected numeric_error");
  } catch (const numeric_error& e) {
    CHECK(e.achieved_error() > 0.0);
  }
}

TEST_CASE("degenerate and invalid ranges") {
  const auto f = [](double) { return 1.0; };
  CHECK(integrate_adaptive(f, 2.0, 2.0, 1e-8).value == 0.0);
  CHECK_THROWS_AS(integrate_adaptive(f, 0.0, 1.0, 0.0), domain_error);
}
