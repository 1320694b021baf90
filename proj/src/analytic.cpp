#include "charsum/analytic.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "charsum/errors.hpp"
#include "charsum/series.hpp"

namespace charsum {

namespace {

constexpr double kSeriesLimit = 4.0;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Power series for Si on [0, kSeriesLimit]; the largest term is below 4 there.
double si_series(double x) {
  const double x2 = x * x;
  double term = x;  // (-1)^k x^(2k+1) / (2k+1)!
  double sum = x;
  for (int k = 1; k < 60; ++k) {
    term *= -x2 / ((2.0 * k) * (2.0 * k + 1.0));
    const double contribution = term / (2.0 * k + 1.0);
    sum += contribution;
    if (std::abs(contribution) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// Power series for Cin on [0, kSeriesLimit].
double cin_series(double x) {
  const double x2 = x * x;
  double term = 1.0;  // (-1)^(k+1) x^(2k) / (2k)!, sign folded below
  double sum = 0.0;
  for (int k = 1; k < 60; ++k) {
    term *= x2 / ((2.0 * k - 1.0) * (2.0 * k));
    const double contribution = ((k % 2 == 1) ? term : -term) / (2.0 * k);
    sum += contribution;
    if (std::abs(contribution) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// e^{ix} E1(ix) = g - i f by the continued fraction 1/(1+ix- 1/(3+ix- 4/(5+ix- ...))).
std::complex<double> exponential_integral_cf(double x) {
  constexpr double kTiny = 1e-300;
  std::complex<double> b(1.0, x);
  std::complex<double> c = 1.0 / kTiny;
  std::complex<double> d = 1.0 / b;
  std::complex<double> h = d;
  for (int i = 2; i < 10'000; ++i) {
    const double a = -static_cast<double>(i - 1) * static_cast<double>(i - 1);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const std::complex<double> del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < kEps) return h;
  }
  throw NumericalError("continued fraction for the sine integral did not converge", 0.0);
}

}  // namespace

SiAuxiliary sine_integral_auxiliary(double x) {
  if (!(x > 0.0)) throw DomainError("auxiliary sine-integral functions need x > 0");
  if (x > kSeriesLimit) {
    const auto h = exponential_integral_cf(x);
    return {-h.imag(), h.real()};
  }
  const double si_shift = si_series(x) - std::numbers::pi / 2;
  const double ci = std::numbers::egamma + std::log(x) - cin_series(x);
  return {ci * std::sin(x) - si_shift * std::cos(x), -ci * std::cos(x) - si_shift * std::sin(x)};
}

double sine_integral(double x) {
  if (!(x >= 0.0)) throw DomainError("sine_integral requires x >= 0");
  if (x <= kSeriesLimit) return si_series(x);
  if (std::isinf(x)) return std::numbers::pi / 2;
  const auto [f, g] = sine_integral_auxiliary(x);
  return std::numbers::pi / 2 - f * std::cos(x) - g * std::sin(x);
}

double cosine_integral(double x) {
  if (!(x > 0.0)) throw DomainError("cosine_integral requires x > 0");
  if (x <= kSeriesLimit) return std::numbers::egamma + std::log(x) - cin_series(x);
  const auto [f, g] = sine_integral_auxiliary(x);
  return f * std::sin(x) - g * std::cos(x);
}

double entire_cosine_integral(double x) {
  if (!(x >= 0.0)) throw DomainError("entire_cosine_integral requires x >= 0");
  if (x <= kSeriesLimit) return cin_series(x);
  return std::numbers::egamma + std::log(x) - cosine_integral(x);
}

LValue l_one(const DirichletCharacter& chi, const LOneOptions& options) {
  if (chi.is_principal()) {
    throw DomainError("L(s, chi_0) has a pole at s = 1; not representable (character " + chi.label().str() + ")");
  }
  if (!(options.target > 0.0)) throw DomainError("target accuracy must be positive");

  const PeriodicTail tail(chi.values(), options.acceleration_levels);
  AcceleratedSumOptions sum_options;
  sum_options.target = options.target;
  sum_options.terms_cap = options.terms_cap;
  sum_options.min_terms = std::max<std::int64_t>(64, chi.modulus());
  const SeriesSum s = accelerated_sum(tail, [](std::int64_t n) { return 1.0 / static_cast<double>(n); }, sum_options);

  LValue out;
  out.value = s.value;
  out.terms_used = s.terms;
  out.tail_bound = s.tail_bound;
  out.converged = s.converged;
  out.label = chi.label();
  return out;
}

}  // namespace charsum
