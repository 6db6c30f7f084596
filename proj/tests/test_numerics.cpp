#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "cic/derivative.hpp"
#include "cic/nelder_mead.hpp"
#include "cic/quadrature.hpp"

using namespace cic;

TEST_CASE("gauss rules integrate polynomials to their exactness degree") {
  for (int n : {4, 7, 8, 15}) {
    const GaussRule& rule = gauss_rule(n);
    REQUIRE(rule.nodes.size() == n);
    CHECK(std::abs(rule.weights.sum() - 2.0) < 1e-14);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double sum = 0.0;
      for (Index i = 0; i < n; ++i) sum += rule.weights(i) * std::pow(rule.nodes(i), k);
      const double exact = k % 2 == 1 ? 0.0 : 2.0 / (k + 1);
      CHECK(std::abs(sum - exact) < 1e-13);
    }
  }
}

TEST_CASE("adaptive 1d integration hits analytic values") {
  const auto sine = integrate_adaptive([](double x) { return std::sin(x); }, 0.0,
                                       std::numbers::pi, 1e-13, 1e-13);
  CHECK(sine.converged);
  CHECK(std::abs(sine.value - 2.0) < 1e-12);

  // Complex-valued integrand: a full period integrates to zero.
  const auto phase = integrate_adaptive(
      [](double x) { return std::exp(Complex(0.0, x)); }, 0.0, 2.0 * std::numbers::pi, 1e-13,
      1e-13);
  CHECK(std::abs(phase.value) < 1e-12);

  // Integrable endpoint steepness forces real subdivision work.
  const auto steep = integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 1e-12, 1.0,
                                        1e-10, 1e-12, 4000);
  CHECK(std::abs(steep.value - 2.0) < 1e-4);
  CHECK(steep.segments > 10);
}

TEST_CASE("adaptive 1d integration reports budget exhaustion") {
  CHECK_THROWS_AS(integrate_adaptive([](double x) { return std::cos(200.0 * x * x); }, 0.0,
                                     10.0, 1e-14, 1e-14, 4),
                  integration_error);
}

TEST_CASE("adaptive 2d integration hits analytic values") {
  const double pi = std::numbers::pi;
  const auto separable = integrate_adaptive_2d(
      [](double x, double y) { return std::cos(x) * std::cos(y); }, -pi / 2, pi / 2, -pi / 2,
      pi / 2, 1e-10);
  CHECK(separable.converged);
  CHECK(std::abs(separable.value - 4.0) < 1e-9);

  const auto constant = integrate_adaptive_2d([](double, double) { return 0.25; }, 0.0, 2.0,
                                              0.0, 2.0, 1e-12);
  CHECK(std::abs(constant.value - 1.0) < 1e-13);

  // A cone apex is an isolated non-smooth point; refinement must localize it.
  const auto cone = integrate_adaptive_2d(
      [](double x, double y) { return std::sqrt(x * x + y * y); }, -1.0, 1.0, -1.0, 1.0, 1e-8);
  // Exact: (2/3)(2 sqrt(2) + asinh(1) * 2 + ...) via the square-cone formula:
  // int over [-1,1]^2 of r = (4/3)(sqrt(2) + asinh(1)).
  const double exact = 4.0 / 3.0 * (std::sqrt(2.0) + std::asinh(1.0));
  CHECK(cone.converged);
  CHECK(std::abs(cone.value - exact) < 1e-7);
}

TEST_CASE("richardson derivatives converge on smooth functions") {
  auto f = [](double x) { return std::exp(x) * std::sin(2.0 * x); };
  auto df = [](double x) { return std::exp(x) * (std::sin(2.0 * x) + 2.0 * std::cos(2.0 * x)); };
  for (double x : {-0.3, 0.0, 1.1}) {
    CHECK(std::abs(derivative_central_richardson(f, x, 1e-4) - df(x)) < 1e-10);
    CHECK(std::abs(derivative_one_sided_richardson(f, x, 1e-4, +1) - df(x)) < 1e-8);
    CHECK(std::abs(derivative_one_sided_richardson(f, x, 1e-4, -1) - df(x)) < 1e-8);
  }
  // One-sided differentiation never samples past the anchor.
  auto guarded = [](double x) {
    if (x > 0.0) throw std::logic_error("sampled the forbidden side");
    return x * x;
  };
  CHECK(std::abs(derivative_one_sided_richardson(guarded, 0.0, 1e-4, -1) - 0.0) < 1e-9);
}

TEST_CASE("nelder-mead minimizes smooth functions") {
  auto quadratic = [](const RealVector& x) {
    return (x(0) - 1.5) * (x(0) - 1.5) + 3.0 * (x(1) + 0.5) * (x(1) + 0.5);
  };
  RealVector start(2);
  start << 0.0, 0.0;
  const NelderMeadResult result = nelder_mead_minimize(quadratic, start);
  CHECK(result.converged);
  CHECK(std::abs(result.x(0) - 1.5) < 1e-5);
  CHECK(std::abs(result.x(1) + 0.5) < 1e-5);
  CHECK(result.value < 1e-9);

  auto rosenbrock = [](const RealVector& x) {
    const double a = 1.0 - x(0);
    const double b = x(1) - x(0) * x(0);
    return a * a + 100.0 * b * b;
  };
  RealVector r_start(2);
  r_start << -1.2, 1.0;
  NelderMeadOptions opts;
  opts.max_iters = 2000;
  const NelderMeadResult banana = nelder_mead_minimize(rosenbrock, r_start, opts);
  CHECK(banana.value < 1e-8);
}

TEST_CASE("nelder-mead respects the iteration cap") {
  auto slow = [](const RealVector& x) { return std::abs(x(0)) + std::abs(x(1)); };
  RealVector start(2);
  start << 100.0, -100.0;
  NelderMeadOptions opts;
  opts.max_iters = 3;
  const NelderMeadResult result = nelder_mead_minimize(slow, start, opts);
  CHECK_FALSE(result.converged);
  CHECK(result.iterations == 3);
}
