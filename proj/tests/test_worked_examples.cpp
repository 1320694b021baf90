#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "charsum/analytic.hpp"
#include "charsum/characters.hpp"
#include "charsum/errors.hpp"
#include "charsum/worked_examples.hpp"

using namespace charsum;
using namespace charsum::examples;

namespace {

constexpr double kPi = std::numbers::pi;

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const DomainError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Example1, HandDerivableSpotValues) {
  const auto a = example1(-3, 1e-10);
  EXPECT_NEAR(a.lhs.real(), -1.0 / 3, 1e-15);
  EXPECT_NEAR(a.rhs.real(), -1.0 / 3, 1e-10);
  EXPECT_TRUE(a.pass);
  const auto b = example1(-4, 1e-10);
  EXPECT_DOUBLE_EQ(b.lhs.real(), -0.5);
  EXPECT_NEAR(b.rhs.real(), -0.5, 1e-10);
}

TEST(Example1, ClassNumberCrossCheck) {
  // L(1, chi_d) = pi h / sqrt(q) for d < -4, so the right side is -h.
  // h(-23) = 3, h(-47) = 5, h(-71) = 7.
  for (auto [d, h] : {std::pair{-23, 3}, {-47, 5}, {-71, 7}}) {
    const auto c = example1(d, 1e-9);
    EXPECT_NEAR(c.rhs.real(), -h, 1e-9) << d;
    EXPECT_TRUE(c.pass);
  }
}

TEST(Example1, RejectsEvenCharacters) {
  const auto msg = message_of([] { example1(5, 1e-8); });
  EXPECT_NE(msg.find("example 1 requires χ(−1) = −1"), std::string::npos) << msg;
}

TEST(Example2, RemainderMatchesIndependentReference) {
  // R(chi_5)/sqrt(5) from a 10^7-term double-precision sum of the eps series.
  const auto c = example2(5, 1e-10);
  ASSERT_TRUE(c.remainder_ratio.has_value());
  EXPECT_NEAR(*c.remainder_ratio, 0.0338749616351706774, 1e-9);
  EXPECT_TRUE(c.pass);
  EXPECT_NE(example2(13, 1e-8).remainder_ratio, example2(5, 1e-8).remainder_ratio);
}

TEST(Example2, EpsilonIsTheSineIntegralDeficit) {
  for (std::int64_t n : {1, 2, 10, 1000}) {
    const double x = 2 * kPi * n;
    const double direct = (kPi / 2 - sine_integral(x)) / x;
    EXPECT_NEAR(sine_integral_correction(n), direct, 1e-14 / x);
  }
  // pi/2 - Si(x) ~ cos(x)/x at x = 2 pi n, so eps_n ~ 1/(2 pi n)^2.
  EXPECT_NEAR(sine_integral_correction(100000) * std::pow(2 * kPi * 1e5, 2), 1.0, 1e-9);
}

TEST(Example2, RejectsOddCharacters) {
  const auto msg = message_of([] { example2(-4, 1e-8); });
  EXPECT_NE(msg.find("example 2 requires χ(−1) = +1"), std::string::npos) << msg;
}

TEST(Example3, BothParities) {
  const auto five = example3(5, 1e-10);
  EXPECT_NEAR(five.lhs.real(), 0.133000188620858145800, 1e-15);
  EXPECT_TRUE(five.pass);
  EXPECT_EQ(five.notes, "cosine branch");
  const auto odd = example3(-7, 1e-10);
  EXPECT_TRUE(odd.pass);
  EXPECT_EQ(odd.notes, "sine branch");
  EXPECT_LE(odd.abs_error, 1e-10);
}

TEST(Example4, MidpointConventionAtJumps) {
  const auto chi5 = real_primitive_character(5);
  EXPECT_EQ(partial_character_sum_midpoint(chi5, Rational(1, 5)), 0.5);  // (0 + 1)/2
  EXPECT_EQ(partial_character_sum_midpoint(chi5, Rational(2, 5)), 0.5);  // (1 + 0)/2
  EXPECT_EQ(partial_character_sum_midpoint(chi5, Rational(1, 4)), 1.0);
  const auto chi4 = real_primitive_character(-4);
  EXPECT_EQ(partial_character_sum_midpoint(chi4, Rational(1, 2)), 1.0);
  EXPECT_EQ(partial_character_sum_midpoint(chi4, Rational(1, 4)), 0.5);
}

TEST(Example4, AveragedSeriesConverges) {
  for (std::int64_t d : {-3, -4, 5, 8}) {
    for (const Rational& y : {Rational(1, 5), Rational(1, 4), Rational(1, 2)}) {
      const auto c = example4(d, y);
      EXPECT_TRUE(c.pass) << d << " " << y.str() << " err " << c.abs_error;
      if (c.decay_slope) {
        EXPECT_LE(*c.decay_slope, -0.8);
      }
    }
  }
  EXPECT_THROW(example4(5, Rational(0, 1)), DomainError);
  EXPECT_THROW(example4(5, Rational(1, 1)), DomainError);
}

TEST(Examples, RejectNonDiscriminants) {
  EXPECT_THROW(example3(12 * 3, 1e-8), DomainError);
  EXPECT_THROW(example1(-12 * 3, 1e-8), DomainError);
}

TEST(Examples, FurtherSpotValues) {
  EXPECT_TRUE(example1(-7, 1e-8).pass);
  EXPECT_LE(example2(8, 1e-8).abs_error, 1e-8);
  const auto m4 = example3(-4, 1e-8);
  EXPECT_NEAR(m4.lhs.real(), std::exp(0.25) - std::exp(0.75), 1e-15);
  EXPECT_LE(m4.abs_error, 1e-8);
  EXPECT_TRUE(example3(-3, 1e-8).pass);
  const auto m3 = example4(-3, Rational(1, 2));
  EXPECT_EQ(m3.lhs.real(), 1.0);
  EXPECT_LE(m3.abs_error, 5e-4);
}

TEST(Example4, AveragedErrorDecaysBetweenTenToTheThreeAndFive) {
  // Not jump points: q y is not an integer.
  ExampleOptions wide;
  wide.cesaro_window = 100'000;
  for (auto [d, y] : {std::pair{-3, Rational(1, 5)}, {-4, Rational(1, 5)}, {5, Rational(1, 4)}, {8, Rational(1, 5)}}) {
    const auto at_4 = example4(d, y);                     // windows 10^3 and 10^4
    const auto at_5 = example4(d, y, kPolyaTolerance, wide);  // windows 10^4 and 10^5
    ASSERT_TRUE(at_4.decay_slope && at_5.decay_slope);
    EXPECT_LE(*at_4.decay_slope, -0.8) << d;
    EXPECT_LE(*at_5.decay_slope, -0.8) << d;
  }
}
