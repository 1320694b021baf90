#pragma once

#include <cstdint>
#include <functional>

namespace charsum::quadrature {

enum class Weight { Cos, Sin };

struct Options {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  int max_cells = 20'000;
  bool singular_left = false;   // integrable singularity of g at a
  bool singular_right = false;  // integrable singularity of g at b
  // Cells with 2 pi n * length above this use the Filon-type rule.
  double filon_threshold = 4.0;
};

struct Result {
  double value = 0.0;
  double error_estimate = 0.0;
  int cells = 0;
};

// int_a^b g(t) w(2 pi n t) dt with w = cos or sin, globally adaptive.
// Throws NumericalError carrying the achieved estimate when max_cells is hit.
Result fourier_integral(const std::function<double(double)>& g, double a, double b, std::int64_t n, Weight w,
                        const Options& options = {});

// Fixed m-point Gauss-Legendre rule on [a, b]; m in [1, 64].
double gauss_legendre(const std::function<double(double)>& g, double a, double b, int points);

}  // namespace charsum::quadrature
