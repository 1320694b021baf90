#pragma once

/**
 * @file worked_examples.hpp
 * @brief Four closed-form consequences of the Fourier expansion, each checked
 *        against an independent direct evaluation for the real primitive
 *        character chi_d = (d / .) of modulus q = |d|.
 *
 *   1. odd chi:  sum chi(k) (k/q)^2 = -(sqrt q / pi) L(1, chi)
 *   2. even chi: sum chi(k) log k   = -(sqrt q / 2) L(1, chi) + R(chi),
 *                R(chi) = 2 sqrt q sum chi(n) eps_n,  eps_n = (pi/2 - Si(2 pi n)) / (2 pi n)
 *   3. sum chi(k) e^{k/q} = 2(e-1) sqrt q sum chi(n) / (1 + 4 pi^2 n^2)           (even)
 *                         = -4 pi (e-1) sqrt q sum chi(n) n / (1 + 4 pi^2 n^2)    (odd)
 *   4. F*(y), the midpoint-normalized partial sum sum_{k <= qy} chi(k), against
 *      its Polya expansion averaged over [N, 2N].
 */

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include "charsum/characters.hpp"
#include "charsum/rational.hpp"

namespace charsum::examples {

// Default agreement for the averaged Polya expansion at N = 10^4.
inline constexpr double kPolyaTolerance = 5e-4;

struct IdentityCheck {
  int id = 0;
  std::int64_t d = 0;
  std::int64_t q = 0;
  CharacterLabel label;
  Parity parity = Parity::Even;
  std::optional<Rational> y;
  std::complex<double> lhs;
  std::complex<double> rhs;
  double abs_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::int64_t terms_used = 0;
  double tail_bound = 0.0;
  std::optional<double> remainder_ratio;  // example 2: R(chi) / sqrt q
  std::optional<double> decay_slope;      // example 4: log10 error ratio between N/10 and N
  std::string notes;
};

struct ExampleOptions {
  std::int64_t terms_cap = 1'000'000;
  std::int64_t cesaro_window = 10'000;
};

IdentityCheck example1(std::int64_t d, double tol, const ExampleOptions& options = {});
IdentityCheck example2(std::int64_t d, double tol, const ExampleOptions& options = {});
IdentityCheck example3(std::int64_t d, double tol, const ExampleOptions& options = {});
IdentityCheck example4(std::int64_t d, Rational y, double tol = kPolyaTolerance, const ExampleOptions& options = {});

// F*(y) = (F(y+0) + F(y-0)) / 2 for F(y) = sum_{1 <= k <= qy} chi(k), exactly.
double partial_character_sum_midpoint(const DirichletCharacter& chi, Rational y);

// eps_n = (pi/2 - Si(2 pi n)) / (2 pi n), evaluated without cancellation.
double sine_integral_correction(std::int64_t n);

}  // namespace charsum::examples
