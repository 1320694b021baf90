#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "charsum/analytic.hpp"
#include "charsum/characters.hpp"
#include "charsum/errors.hpp"
#include "charsum/gauss_sums.hpp"
#include "charsum/quadrature.hpp"

using namespace charsum;

namespace {

constexpr double kPi = std::numbers::pi;

// Reference values computed with mpmath at 30 digits.
struct Reference {
  double x, si, ci;
};
constexpr Reference kReference[] = {
    {0.5, 0.49310741804306668916, -0.17778407880661290134},
    {1.0, 0.94608307036718301494, 0.33740392290096813466},
    {3.9, 1.7765013604478054387, -0.12349934920781514267},
    {4.0, 1.7582031389490530581, -0.14098169788693041164},
    {4.1, 1.7387436264917689258, -0.15616539182812110957},
    {8.0, 1.5741868217069420521, 0.12243388253200955729},
    {10.0, 1.6583475942188740493, -0.045456433004455372635},
    {30.0, 1.566756540030351111, -0.033032417282071143779},
    {100.0, 1.5622254668890562934, -0.0051488251426104921444},
    {1000.0, 1.5702331219687712181, 0.000826315511090682282},
    {12345.6, 1.5707434305200883541, -0.000061343850253071486832},
};

// L(1, chi) = (pi i tau(chi) / q^2) sum_a conj(chi(a)) a for primitive odd chi.
std::complex<double> odd_l_one_closed_form(const DirichletCharacter& chi) {
  const std::int64_t q = chi.modulus();
  std::complex<double> s;
  for (std::int64_t a = 1; a < q; ++a) s += std::conj(chi(a)) * static_cast<double>(a);
  return std::complex<double>(0, kPi) * tau(chi).value * s / static_cast<double>(q * q);
}

}  // namespace

TEST(SineIntegral, MatchesReferenceValues) {
  for (const auto& r : kReference) {
    EXPECT_NEAR(sine_integral(r.x), r.si, 1e-12) << r.x;
    EXPECT_NEAR(cosine_integral(r.x), r.ci, 1e-12) << r.x;
  }
  EXPECT_NEAR(sine_integral(kPi), 1.85193705198246617036, 1e-13);
  EXPECT_EQ(sine_integral(0.0), 0.0);
}

TEST(SineIntegral, MatchesQuadratureOfTheIntegrand) {
  auto sinc = [](double u) { return u == 0.0 ? 1.0 : std::sin(u) / u; };
  for (double x = 0.25; x <= 40.0; x += 0.75) {
    double total = 0.0;
    const int pieces = static_cast<int>(std::ceil(x));
    for (int i = 0; i < pieces; ++i) total += quadrature::gauss_legendre(sinc, x * i / pieces, x * (i + 1) / pieces, 20);
    EXPECT_NEAR(sine_integral(x), total, 1e-13) << x;
  }
}

TEST(SineIntegral, ContinuousAcrossTheSeriesSwitch) {
  for (double x : {3.999999, 4.0, 4.000001}) {
    EXPECT_NEAR(sine_integral(x), sine_integral(4.0) + std::sin(4.0) / 4.0 * (x - 4.0), 1e-11);
  }
}

TEST(SineIntegral, AuxiliaryFunctionsReproduceSiAndCi) {
  for (double x : {0.1, 1.0, 4.0, 6.28, 50.0, 1e4}) {
    const auto a = sine_integral_auxiliary(x);
    EXPECT_GT(a.f, 0.0);
    EXPECT_GT(a.g, 0.0);
    EXPECT_NEAR(kPi / 2 - a.f * std::cos(x) - a.g * std::sin(x), sine_integral(x), 1e-12);
    EXPECT_NEAR(a.f * std::sin(x) - a.g * std::cos(x), cosine_integral(x), 1e-12);
  }
  // f(x) ~ 1/x for large x.
  EXPECT_NEAR(sine_integral_auxiliary(1e6).f * 1e6, 1.0, 1e-11);
}

TEST(SineIntegral, EntireCosineIntegral) {
  EXPECT_EQ(entire_cosine_integral(0.0), 0.0);
  // Cin(x) ~ x^2/4 near 0.
  EXPECT_NEAR(entire_cosine_integral(1e-4) / 2.5e-9, 1.0, 1e-8);
  for (double x : {0.5, 4.0, 100.0}) {
    EXPECT_NEAR(entire_cosine_integral(x), std::numbers::egamma + std::log(x) - cosine_integral(x), 1e-12);
  }
  EXPECT_THROW(cosine_integral(0.0), DomainError);
  EXPECT_THROW(sine_integral(-1.0), DomainError);
}

TEST(LOne, QuadraticCharactersMatchClassNumberFormula) {
  struct Case {
    std::int64_t d;
    double value;
  };
  const Case cases[] = {
      {-4, kPi / 4},
      {-3, kPi / (3 * std::sqrt(3.0))},
      {5, 0.43040894096400403889},                               // 2 log((1 + sqrt 5)/2) / sqrt 5
      {8, 0.62322524014023051339},                               // log(1 + sqrt 2) / sqrt 2
      {-23, 3 * kPi / std::sqrt(23.0)},                          // h = 3
      {-47, 5 * kPi / std::sqrt(47.0)},                          // h = 5
  };
  for (const auto& c : cases) {
    const LValue l = l_one(real_primitive_character(c.d));
    EXPECT_NEAR(l.value.real(), c.value, 1e-10) << c.d;
    EXPECT_EQ(l.value.imag(), 0.0);
    EXPECT_TRUE(l.converged);
    EXPECT_LE(std::abs(l.value.real() - c.value), l.tail_bound + 1e-14) << "bound must cover the error, d=" << c.d;
  }
}

TEST(LOne, ComplexOddCharactersMatchClosedForm) {
  for (std::int64_t q : {5, 7, 13, 16, 29}) {
    const auto group = build_character_group(q);
    for (const auto& chi : group.primitive_characters()) {
      if (chi.parity() != Parity::Odd) continue;
      const LValue l = l_one(chi, {.target = 1e-12});
      EXPECT_LT(std::abs(l.value - odd_l_one_closed_form(chi)), 1e-11) << chi.label().str();
    }
  }
}

TEST(LOne, ImprimitiveNonPrincipalCharactersConverge) {
  // chi mod 12 induced from chi_{-4}: L(1, chi) = (1 - chi_{-4}(3)/3) pi/4.
  const auto group = build_character_group(12);
  for (const auto& chi : group.characters()) {
    if (chi.conductor() != 4) continue;
    EXPECT_NEAR(l_one(chi).value.real(), (1.0 + 1.0 / 3.0) * kPi / 4, 1e-10);
  }
}

TEST(LOne, PrincipalCharacterIsAPole) {
  const auto group = build_character_group(7);
  try {
    l_one(group.characters()[0]);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("pole"), std::string::npos);
  }
}

TEST(LOne, BoundIsHonestAtLooseTargets) {
  const auto chi = real_primitive_character(-163);
  const double truth = kPi / std::sqrt(163.0);  // h = 1
  for (double target : {1e-3, 1e-5, 1e-7}) {
    const LValue l = l_one(chi, {.target = target});
    EXPECT_LE(l.tail_bound, target);
    EXPECT_LE(std::abs(l.value.real() - truth), l.tail_bound);
  }
}

TEST(LOne, PositiveAndRealForRealPrimitiveCharacters) {
  for (std::int64_t d : fundamental_discriminants(1, 500)) {
    const LValue l = l_one(real_primitive_character(d), {.target = 1e-9});
    EXPECT_GT(l.value.real(), 0.0) << d;
    EXPECT_EQ(l.value.imag(), 0.0);
  }
}

TEST(SineIntegral, LargeArgumentLimit) {
  EXPECT_NEAR(sine_integral(1e4), kPi / 2, 1e-4);
  EXPECT_NEAR(sine_integral(1e12), kPi / 2, 1e-11);
}
