#pragma once

#include <complex>
#include <cstdint>

#include "charsum/characters.hpp"

namespace charsum {

struct LValue {
  std::complex<double> value;
  std::int64_t terms_used = 0;
  double tail_bound = 0.0;
  bool converged = false;
  CharacterLabel label;
};

struct LOneOptions {
  double target = 1e-10;
  std::int64_t terms_cap = 10'000'000;
  int acceleration_levels = 3;
};

// L(1, chi) = sum chi(n)/n for a non-principal character. The series is cut at a
// multiple of q and the remainder is folded in by periodic summation by parts;
// tail_bound is rigorous because every finite difference of 1/n is monotone.
LValue l_one(const DirichletCharacter& chi, const LOneOptions& options = {});

// Si(x) = int_0^x sin(u)/u du for x >= 0, absolute error below 1e-12.
double sine_integral(double x);

// Ci(x) = gamma + ln x + int_0^x (cos(u) - 1)/u du for x > 0.
double cosine_integral(double x);

// Cin(x) = int_0^x (1 - cos u)/u du = gamma + ln x - Ci(x), entire; x >= 0.
double entire_cosine_integral(double x);

// Auxiliary functions with Si(x) = pi/2 - f cos x - g sin x and
// Ci(x) = f sin x - g cos x; both positive and decreasing for x > 0.
struct SiAuxiliary {
  double f;
  double g;
};
SiAuxiliary sine_integral_auxiliary(double x);

}  // namespace charsum
