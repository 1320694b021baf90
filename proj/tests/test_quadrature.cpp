#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "charsum/errors.hpp"
#include "charsum/quadrature.hpp"

using namespace charsum;
using quadrature::Weight;

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST(GaussLegendre, ExactForPolynomialsUpToDegree2mMinus1) {
  for (int m : {1, 2, 5, 12, 24, 64}) {
    const int degree = 2 * m - 1;
    const double got = quadrature::gauss_legendre([&](double x) { return std::pow(x, degree); }, 0.0, 1.0, m);
    EXPECT_NEAR(got, 1.0 / (degree + 1), 1e-14) << m;
  }
  EXPECT_THROW(quadrature::gauss_legendre([](double) { return 1.0; }, 0, 1, 65), DomainError);
}

TEST(FourierIntegral, PolynomialAgainstClosedForm) {
  for (std::int64_t n : {1, 2, 7, 50, 1000, 100000}) {
    const double b = 2 * kPi * n;
    const auto c = quadrature::fourier_integral([](double t) { return t * t; }, 0, 1, n, Weight::Cos);
    const auto s = quadrature::fourier_integral([](double t) { return t * t; }, 0, 1, n, Weight::Sin);
    EXPECT_NEAR(c.value, 2.0 / (b * b), 1e-12 / n + 1e-16) << n;
    EXPECT_NEAR(s.value, -1.0 / b, 1e-12 / n) << n;
  }
}

TEST(FourierIntegral, ExponentialAgainstClosedForm) {
  const double em1 = std::numbers::e - 1.0;
  for (std::int64_t n : {1, 3, 40, 2500}) {
    const double b = 2 * kPi * n;
    const auto c = quadrature::fourier_integral([](double t) { return std::exp(t); }, 0, 1, n, Weight::Cos);
    const auto s = quadrature::fourier_integral([](double t) { return std::exp(t); }, 0, 1, n, Weight::Sin);
    EXPECT_NEAR(c.value, em1 / (1 + b * b), 1e-13);
    EXPECT_NEAR(s.value, -b * em1 / (1 + b * b), 1e-13);
    EXPECT_LT(c.error_estimate, 1e-11);
  }
}

TEST(FourierIntegral, PartialIntervalOfAStep) {
  // int_0^{1/4} sin(2 pi n t) dt = (1 - cos(pi n / 2)) / (2 pi n)
  for (std::int64_t n : {1, 2, 3, 4, 17, 999}) {
    const auto s = quadrature::fourier_integral([](double) { return 1.0; }, 0, 0.25, n, Weight::Sin);
    EXPECT_NEAR(s.value, (1 - std::cos(kPi * n / 2)) / (2 * kPi * n), 1e-14);
  }
}

TEST(FourierIntegral, LogarithmicEndpointSingularity) {
  // int_0^1 log t dt = -1; int_0^1 log t cos(2 pi t) dt = -Si(2 pi)/(2 pi) ~ -0.2257...
  quadrature::Options o;
  o.singular_left = true;
  const auto zero = quadrature::fourier_integral([](double t) { return std::log(t); }, 0, 1, 0, Weight::Cos, o);
  EXPECT_NEAR(zero.value, -1.0, 1e-11);
  const auto one = quadrature::fourier_integral([](double t) { return std::log(t); }, 0, 1, 1, Weight::Cos, o);
  EXPECT_NEAR(one.value, -1.4181515761326284502 / (2 * kPi), 1e-11);  // Si(2 pi) from mpmath
}

TEST(FourierIntegral, ThrowsWhenTheCellBudgetRunsOut) {
  quadrature::Options o;
  o.max_cells = 3;
  o.rel_tol = 1e-15;
  o.abs_tol = 0;
  try {
    quadrature::fourier_integral([](double t) { return std::sqrt(t); }, 0, 1, 1, Weight::Cos, o);
    FAIL() << "expected NumericalError";
  } catch (const NumericalError& e) {
    EXPECT_GT(e.achieved_error(), 0.0);
  }
}
