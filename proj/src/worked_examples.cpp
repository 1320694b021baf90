#include "charsum/worked_examples.hpp"

#include <cmath>
#include <numbers>

#include "charsum/analytic.hpp"
#include "charsum/errors.hpp"
#include "charsum/fourier.hpp"
#include "charsum/gauss_sums.hpp"
#include "charsum/series.hpp"

namespace charsum::examples {

namespace {

constexpr double kPi = std::numbers::pi;

IdentityCheck start(int id, const DirichletCharacter& chi, std::int64_t d, double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  IdentityCheck c;
  c.id = id;
  c.d = d;
  c.q = chi.modulus();
  c.label = chi.label();
  c.parity = chi.parity();
  c.tolerance = tol;
  return c;
}

void finish(IdentityCheck& c) {
  c.abs_error = std::abs(c.lhs - c.rhs);
  c.pass = c.abs_error <= c.tolerance;
}

SeriesSum character_series(const DirichletCharacter& chi, const CoefficientFn& c, double target,
                           const ExampleOptions& options) {
  const PeriodicTail tail(chi.values(), 3);
  AcceleratedSumOptions o;
  o.target = target;
  o.terms_cap = options.terms_cap;
  o.min_terms = std::max<std::int64_t>(64, chi.modulus());
  return accelerated_sum(tail, c, o);
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

double sine_integral_correction(std::int64_t n) {
  if (n < 1) throw DomainError("eps_n needs n >= 1");
  // At x = 2 pi n, pi/2 - Si(x) = f(x) cos x + g(x) sin x = f(x).
  const double x = 2.0 * kPi * static_cast<double>(n);
  return sine_integral_auxiliary(x).f / x;
}

double partial_character_sum_midpoint(const DirichletCharacter& chi, Rational y) {
  if (!(y.num > 0 && y.num < y.den)) throw DomainError("y must lie in (0, 1), got " + y.str());
  const std::int64_t q = chi.modulus();
  const auto scaled = static_cast<WideInt>(q) * y.num;
  const auto top = static_cast<std::int64_t>(scaled / y.den);
  const bool at_jump = scaled % y.den == 0;

  std::complex<double> below{};
  for (std::int64_t k = 1; k < (at_jump ? top : top + 1); ++k) below += chi(k);
  std::complex<double> value = below;
  if (at_jump) value += 0.5 * chi(top);
  if (!chi.is_real()) throw DomainError("partial sum midpoint is reported for real characters");
  return value.real();
}

IdentityCheck example1(std::int64_t d, double tol, const ExampleOptions& options) {
  if (d >= 0) throw DomainError("example 1 requires χ(−1) = −1 (d must be negative)");
  const DirichletCharacter chi = real_primitive_character(d);
  IdentityCheck c = start(1, chi, d, tol);
  const double root = std::sqrt(static_cast<double>(c.q));

  c.lhs = direct_sum(chi, FunctionSpec::square());
  LOneOptions l_options;
  l_options.target = tol * kPi / (4.0 * root);
  l_options.terms_cap = std::max<std::int64_t>(options.terms_cap, 10'000'000);
  const LValue l = l_one(chi, l_options);
  c.rhs = -(root / kPi) * l.value;
  c.terms_used = l.terms_used;
  c.tail_bound = root / kPi * l.tail_bound;
  c.notes = "L(1,chi)=" + fmt(l.value.real());
  finish(c);
  return c;
}

IdentityCheck example2(std::int64_t d, double tol, const ExampleOptions& options) {
  if (d <= 1) throw DomainError("example 2 requires χ(−1) = +1 (d must be positive)");
  const DirichletCharacter chi = real_primitive_character(d);
  IdentityCheck c = start(2, chi, d, tol);
  const double root = std::sqrt(static_cast<double>(c.q));

  CompensatedSum log_sum;
  for (std::int64_t k = 1; k < c.q; ++k) {
    if (int v = chi.real_value(k); v != 0) log_sum.add(v * std::log(static_cast<double>(k)));
  }
  c.lhs = log_sum.value();

  LOneOptions l_options;
  l_options.target = tol / (2.0 * root);
  l_options.terms_cap = std::max<std::int64_t>(options.terms_cap, 10'000'000);
  const LValue l = l_one(chi, l_options);

  const SeriesSum eps = character_series(chi, sine_integral_correction, tol / (8.0 * root), options);
  const std::complex<double> remainder_series = 2.0 * root * eps.value;
  const std::complex<double> remainder_direct = c.lhs + 0.5 * root * l.value;

  c.rhs = -0.5 * root * l.value + remainder_series;
  c.terms_used = std::max(l.terms_used, eps.terms);
  c.tail_bound = 0.5 * root * l.tail_bound + 2.0 * root * eps.tail_bound;
  c.remainder_ratio = remainder_direct.real() / root;
  c.notes = "R/sqrt(q)=" + fmt(*c.remainder_ratio) + " R_series/sqrt(q)=" + fmt(remainder_series.real() / root);
  finish(c);
  return c;
}

IdentityCheck example3(std::int64_t d, double tol, const ExampleOptions& options) {
  const DirichletCharacter chi = real_primitive_character(d);
  IdentityCheck c = start(3, chi, d, tol);
  const double root = std::sqrt(static_cast<double>(c.q));
  const double em1 = std::numbers::e - 1.0;

  c.lhs = direct_sum(chi, FunctionSpec::exponential());
  const bool even = chi.parity() == Parity::Even;
  const double prefactor = even ? 2.0 * em1 * root : -4.0 * kPi * em1 * root;
  const CoefficientFn coeff = even ? CoefficientFn([](std::int64_t n) {
    const double dn = static_cast<double>(n);
    return 1.0 / (1.0 + 4.0 * kPi * kPi * dn * dn);
  })
                                   : CoefficientFn([](std::int64_t n) {
                                       const double dn = static_cast<double>(n);
                                       return dn / (1.0 + 4.0 * kPi * kPi * dn * dn);
                                     });
  const SeriesSum s = character_series(chi, coeff, tol / (4.0 * std::abs(prefactor)), options);
  c.rhs = prefactor * s.value;
  c.terms_used = s.terms;
  c.tail_bound = std::abs(prefactor) * s.tail_bound;
  c.notes = even ? "cosine branch" : "sine branch";
  finish(c);
  return c;
}

IdentityCheck example4(std::int64_t d, Rational y, double tol, const ExampleOptions& options) {
  if (!(y.num > 0 && y.num < y.den)) throw DomainError("example 4 requires 0 < y < 1, got " + y.str());
  const std::int64_t window = options.cesaro_window;
  if (window < 10) throw DomainError("example 4 needs a Cesaro window of at least 10 terms");
  const DirichletCharacter chi = real_primitive_character(d);
  IdentityCheck c = start(4, chi, d, tol);
  c.y = y;

  c.lhs = partial_character_sum_midpoint(chi, y);

  const std::complex<double> t = tau(chi).value;
  std::vector<std::complex<double>> conj_values = chi.values();
  for (auto& v : conj_values) v = std::conj(v);
  const bool even = chi.parity() == Parity::Even;
  const CoefficientFn coeff = [y, even](std::int64_t n) {
    const auto r = static_cast<std::int64_t>(static_cast<WideInt>(n) * y.num % y.den);
    const auto phase = unit_root(r, y.den);
    return (even ? phase.imag() : phase.real()) / static_cast<double>(n);
  };
  const std::int64_t windows[] = {window / 10, window};
  const auto means = cesaro_means(conj_values, coeff, windows);

  std::complex<double> coarse, fine;
  if (even) {
    coarse = t / kPi * means[0];
    fine = t / kPi * means[1];
  } else {
    LOneOptions l_options;
    l_options.target = 1e-13;
    const LValue l = l_one(chi.conjugate(), l_options);
    const std::complex<double> factor = t / (std::complex<double>(0.0, 1.0) * kPi);
    coarse = factor * (l.value - means[0]);
    fine = factor * (l.value - means[1]);
  }
  c.rhs = fine;
  c.terms_used = 2 * window;
  c.tail_bound = std::abs(t) / kPi * 2.0 * PeriodicTail(conj_values, 0).partial_sum_bound() / static_cast<double>(window);

  const double coarse_error = std::abs(c.lhs - coarse);
  const double fine_error = std::abs(c.lhs - fine);
  // Both windows can land on the exact value (e.g. y = 1/2 for even chi); no slope then.
  if (coarse_error > 1e-14 && fine_error > 0.0) c.decay_slope = std::log10(fine_error / coarse_error);
  c.notes = "Cesaro mean over [" + std::to_string(window) + ", " + std::to_string(2 * window) +
            "]; error at N/10=" + fmt(coarse_error);
  finish(c);
  return c;
}

}  // namespace charsum::examples
