#include "charsum/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "charsum/analytic.hpp"
#include "charsum/errors.hpp"
#include "charsum/gauss_sums.hpp"
#include "charsum/series.hpp"

namespace charsum {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kClosedFormRelError = 1e-14;
constexpr double kRealSlack = 1e-9;

quadrature::Weight to_weight(CoefficientKind kind) {
  return kind == CoefficientKind::Cos ? quadrature::Weight::Cos : quadrature::Weight::Sin;
}

void require_theorem_hypotheses(const DirichletCharacter& chi, const FunctionSpec& f) {
  if (!chi.is_primitive()) {
    throw DomainError("the Fourier expansion of the character sum needs a primitive character; " + chi.label().str() +
                      " has conductor " + std::to_string(chi.conductor()));
  }
  if (chi.modulus() < 3) throw DomainError("primitive characters with the expansion need q >= 3");
  if (f.variation_class() == VariationClass::UnboundedVariation) {
    throw DomainError("function '" + f.name() + "' is declared of unbounded variation");
  }
}

}  // namespace

const char* to_string(VariationClass c) {
  switch (c) {
    case VariationClass::SmoothC2: return "smooth_c2";
    case VariationClass::PiecewiseSmooth: return "piecewise_smooth";
    case VariationClass::IntegrableSingularAtZero: return "integrable_singular_at_zero";
    case VariationClass::UnboundedVariation: return "unbounded_variation";
  }
  return "?";
}

const char* to_string(ParityBranch b) { return b == ParityBranch::CosineEven ? "cosine_even" : "sine_odd"; }

const char* to_string(SummationMethod m) { return m == SummationMethod::Accelerated ? "accelerated" : "cesaro"; }

// ---------------------------------------------------------------------------
// FunctionSpec

FunctionSpec::FunctionSpec(std::string name, Evaluator f, VariationClass variation, std::vector<JumpPoint> jumps,
                           CoefficientFormula closed_form, bool singular_at_zero, bool singular_at_one)
    : name_(std::move(name)),
      f_(std::move(f)),
      variation_(variation),
      jumps_(std::move(jumps)),
      closed_form_(std::move(closed_form)),
      singular_at_zero_(singular_at_zero),
      singular_at_one_(singular_at_one) {
  if (!f_) throw DomainError("function '" + name_ + "' has no evaluator");
  for (const auto& j : jumps_) {
    if (!(j.t > 0.0 && j.t < 1.0)) throw DomainError("jump point of '" + name_ + "' must lie in (0, 1)");
    if (!std::isfinite(j.left) || !std::isfinite(j.right)) {
      throw DomainError("jump of '" + name_ + "' must have finite one-sided limits");
    }
  }
  std::sort(jumps_.begin(), jumps_.end(), [](const JumpPoint& a, const JumpPoint& b) { return a.t < b.t; });
}

FunctionSpec FunctionSpec::without_closed_form() const {
  return FunctionSpec(name_, f_, variation_, jumps_, {}, singular_at_zero_, singular_at_one_);
}

FunctionSpec FunctionSpec::square() {
  return FunctionSpec(
      "t2", [](double t) { return t * t; }, VariationClass::SmoothC2, {},
      [](std::int64_t n, CoefficientKind kind) {
        const double dn = static_cast<double>(n);
        if (kind == CoefficientKind::Cos) return 1.0 / (2.0 * std::numbers::pi * std::numbers::pi * dn * dn);
        return -1.0 / (kTwoPi * dn);
      });
}

FunctionSpec FunctionSpec::identity() {
  return FunctionSpec(
      "t", [](double t) { return t; }, VariationClass::SmoothC2, {},
      [](std::int64_t n, CoefficientKind kind) {
        if (kind == CoefficientKind::Cos) return 0.0;
        return -1.0 / (kTwoPi * static_cast<double>(n));
      });
}

FunctionSpec FunctionSpec::centered_linear() {
  return FunctionSpec(
      "t-1/2", [](double t) { return t - 0.5; }, VariationClass::SmoothC2, {},
      [](std::int64_t n, CoefficientKind kind) {
        if (kind == CoefficientKind::Cos) return 0.0;
        return -1.0 / (kTwoPi * static_cast<double>(n));
      });
}

FunctionSpec FunctionSpec::exponential() {
  return FunctionSpec(
      "exp", [](double t) { return std::exp(t); }, VariationClass::SmoothC2, {},
      [](std::int64_t n, CoefficientKind kind) {
        const double b = kTwoPi * static_cast<double>(n);
        const double scale = (std::numbers::e - 1.0) / (1.0 + b * b);
        return kind == CoefficientKind::Cos ? scale : -b * scale;
      });
}

FunctionSpec FunctionSpec::logarithm() {
  return FunctionSpec(
      "log", [](double t) { return std::log(t); }, VariationClass::IntegrableSingularAtZero, {},
      [](std::int64_t n, CoefficientKind kind) {
        // integrate by parts against sin(bt)/b, resp. (1 - cos bt)/b
        const double b = kTwoPi * static_cast<double>(n);
        if (kind == CoefficientKind::Cos) return -sine_integral(b) / b;
        return -entire_cosine_integral(b) / b;
      },
      /*singular_at_zero=*/true);
}

FunctionSpec FunctionSpec::step(Rational y) {
  if (!(y.num > 0 && y.num < y.den)) throw DomainError("step position must lie in (0, 1), got " + y.str());
  const double yd = y.to_double();
  return FunctionSpec(
      "step:" + y.str(), [yd](double t) { return t <= yd ? 1.0 : 0.0; }, VariationClass::PiecewiseSmooth,
      {JumpPoint{yd, 1.0, 0.0}},
      [y](std::int64_t n, CoefficientKind kind) {
        // e(n y) from the exact residue of n * num modulo den
        const std::int64_t r = static_cast<std::int64_t>(static_cast<WideInt>(n) * y.num % y.den);
        const auto phase = unit_root(r, y.den);
        const double b = kTwoPi * static_cast<double>(n);
        return kind == CoefficientKind::Cos ? phase.imag() / b : (1.0 - phase.real()) / b;
      });
}

FunctionSpec FunctionSpec::parse(std::string_view name) {
  if (name == "t2" || name == "t^2") return square();
  if (name == "t") return identity();
  if (name == "exp") return exponential();
  if (name == "log") return logarithm();
  if (name.starts_with("step:")) return step(Rational::parse(name.substr(5)));
  throw DomainError("unknown function '" + std::string(name) + "' (expected t2, t, exp, log or step:<y>)");
}

// ---------------------------------------------------------------------------

double fstar(const FunctionSpec& f, double x) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("f* is evaluated on (0, 1) only");
  for (const auto& j : f.jump_points()) {
    if (j.t == x) return 0.5 * (j.left + j.right);
  }
  return f.evaluate(x);
}

std::complex<double> direct_sum(const DirichletCharacter& chi, const FunctionSpec& f) {
  require_theorem_hypotheses(chi, f);
  const std::int64_t q = chi.modulus();
  const double dq = static_cast<double>(q);
  CompensatedSum sum;
  for (std::int64_t k = 1; k < q; ++k) {
    if (!chi.turn(k)) continue;
    const double value = fstar(f, static_cast<double>(k) / dq);
    sum.add(chi.is_real() ? std::complex<double>(chi.real_value(k) * value, 0.0) : chi(k) * value);
  }
  return sum.value();
}

quadrature::Result fourier_coefficient_quadrature(const FunctionSpec& f, std::int64_t n, CoefficientKind kind,
                                                  const CoefficientOptions& options) {
  if (n < 1) throw DomainError("Fourier coefficient index must be >= 1");
  std::vector<double> breaks{0.0};
  for (const auto& j : f.jump_points()) breaks.push_back(j.t);
  breaks.push_back(1.0);

  quadrature::Result total;
  auto g = [&f](double t) { return f.evaluate(t); };
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    quadrature::Options piece = options.quadrature;
    piece.singular_left = (i == 0) && f.singular_at_zero();
    piece.singular_right = (i + 2 == breaks.size()) && f.singular_at_one();
    const auto r = quadrature::fourier_integral(g, breaks[i], breaks[i + 1], n, to_weight(kind), piece);
    total.value += r.value;
    total.error_estimate += r.error_estimate;
    total.cells += r.cells;
  }
  return total;
}

double fourier_coefficient(const FunctionSpec& f, std::int64_t n, CoefficientKind kind,
                           const CoefficientOptions& options) {
  if (n < 1) throw DomainError("Fourier coefficient index must be >= 1");
  if (f.has_closed_form()) return f.closed_form(n, kind);
  return fourier_coefficient_quadrature(f, n, kind, options).value;
}

// ---------------------------------------------------------------------------
// CoefficientTable

CoefficientTable::CoefficientTable(const FunctionSpec& f, CoefficientKind kind, CoefficientOptions options)
    : f_(f), kind_(kind), options_(options) {}

double CoefficientTable::operator()(std::int64_t n) {
  if (n < 1) throw DomainError("Fourier coefficient index must be >= 1");
  while (static_cast<std::int64_t>(values_.size()) < n) {
    const std::int64_t m = static_cast<std::int64_t>(values_.size()) + 1;
    if (f_.has_closed_form()) {
      values_.push_back(f_.closed_form(m, kind_));
      errors_.push_back(0.0);
    } else {
      const auto r = fourier_coefficient_quadrature(f_, m, kind_, options_);
      values_.push_back(r.value);
      errors_.push_back(r.error_estimate);
    }
  }
  return values_[static_cast<std::size_t>(n - 1)];
}

double CoefficientTable::relative_error() const {
  return f_.has_closed_form() ? kClosedFormRelError : options_.quadrature.rel_tol;
}

double CoefficientTable::error_budget(std::int64_t up_to) const {
  double budget = 0.0;
  const auto limit = std::min<std::size_t>(errors_.size(), static_cast<std::size_t>(std::max<std::int64_t>(up_to, 0)));
  for (std::size_t i = 0; i < limit; ++i) budget += errors_[i];
  return budget;
}

// ---------------------------------------------------------------------------
// Series form

SeriesEvaluation theorem_series(const DirichletCharacter& chi, const FunctionSpec& f, double target_accuracy,
                                const SeriesOptions& options) {
  require_theorem_hypotheses(chi, f);
  CoefficientTable table(f, chi.parity() == Parity::Even ? CoefficientKind::Cos : CoefficientKind::Sin);
  return theorem_series(chi, table, target_accuracy, options);
}

SeriesEvaluation theorem_series(const DirichletCharacter& chi, CoefficientTable& coefficients, double target_accuracy,
                                const SeriesOptions& options) {
  const FunctionSpec& f = coefficients.function();
  require_theorem_hypotheses(chi, f);
  if (!(target_accuracy > 0.0)) throw DomainError("target accuracy must be positive");

  const bool even = chi.parity() == Parity::Even;
  const CoefficientKind wanted = even ? CoefficientKind::Cos : CoefficientKind::Sin;
  if (coefficients.kind() != wanted) {
    throw DomainError(std::string("character parity selects the ") + (even ? "cosine" : "sine") +
                      " coefficients; the table holds the other kind");
  }

  SeriesEvaluation out;
  out.parity_branch = even ? ParityBranch::CosineEven : ParityBranch::SineOdd;
  const std::complex<double> t = tau(chi).value;
  const std::complex<double> prefactor = even ? 2.0 * t : std::complex<double>(0.0, -2.0) * t;
  const double scale = std::abs(prefactor);

  std::vector<std::complex<double>> conj_values = chi.values();
  for (auto& v : conj_values) v = std::conj(v);
  const CoefficientFn c = [&coefficients](std::int64_t n) { return coefficients(n); };

  std::int64_t coefficient_span = 0;
  if (f.variation_class() == VariationClass::SmoothC2) {
    const PeriodicTail tail(conj_values, options.acceleration_levels);
    AcceleratedSumOptions sum_options;
    sum_options.target = target_accuracy / scale;
    sum_options.terms_cap = options.terms_cap;
    sum_options.min_terms = std::max<std::int64_t>(64, chi.modulus());
    sum_options.coefficient_rel_error = coefficients.relative_error();
    SeriesSum s = accelerated_sum(tail, c, sum_options);
    out.method = SummationMethod::Accelerated;
    out.value = prefactor * s.value;
    out.terms_used = s.terms;
    out.tail_bound = scale * s.tail_bound;
    coefficient_span = static_cast<std::int64_t>(s.coefficients.size());
    if (options.keep_coefficients) out.per_term_coefficients = std::move(s.coefficients);
    out.notes = "periodic summation by parts, " + std::to_string(options.acceleration_levels) + " levels";
  } else {
    std::int64_t window = std::max<std::int64_t>(1, std::min(options.cesaro_window, options.terms_cap / 2));
    const std::int64_t windows[] = {window};
    const auto mean = cesaro_means(conj_values, c, windows).front();
    const PeriodicTail bound_only(conj_values, 0);
    double envelope = 0.0;  // max n |c_n| on the window
    for (std::int64_t n = window; n <= 2 * window; ++n) {
      envelope = std::max(envelope, static_cast<double>(n) * std::abs(coefficients(n)));
    }
    out.method = SummationMethod::CesaroWindow;
    out.value = prefactor * mean;
    out.terms_used = 2 * window;
    out.tail_bound = scale * 2.0 * bound_only.partial_sum_bound() * envelope / static_cast<double>(window);
    coefficient_span = 2 * window;
    if (options.keep_coefficients) {
      for (std::int64_t n = 1; n <= 2 * window; ++n) out.per_term_coefficients.push_back(coefficients(n));
    }
    out.notes = "Cesaro mean of partial sums over [" + std::to_string(window) + ", " + std::to_string(2 * window) +
                "]; tail_bound is an envelope estimate";
  }
  out.converged = out.tail_bound <= target_accuracy;
  out.quadrature_budget = scale * coefficients.error_budget(coefficient_span);

  if (chi.is_real()) {
    const double slack = out.tail_bound + kRealSlack + out.quadrature_budget;
    if (std::abs(out.value.imag()) > slack) {
      throw NumericalError("series value for a real character is not real", std::abs(out.value.imag()));
    }
    out.value = {out.value.real(), 0.0};
  }
  return out;
}

TheoremVerification verify_theorem(const DirichletCharacter& chi, const FunctionSpec& f, double target_accuracy,
                                   const SeriesOptions& options) {
  require_theorem_hypotheses(chi, f);
  CoefficientTable table(f, chi.parity() == Parity::Even ? CoefficientKind::Cos : CoefficientKind::Sin);
  return verify_theorem(chi, table, target_accuracy, options);
}

TheoremVerification verify_theorem(const DirichletCharacter& chi, CoefficientTable& coefficients,
                                   double target_accuracy, const SeriesOptions& options) {
  TheoremVerification v;
  v.direct = direct_sum(chi, coefficients.function());
  v.series = theorem_series(chi, coefficients, target_accuracy, options);
  v.difference = std::abs(v.direct - v.series.value);
  v.allowance = v.series.tail_bound + kRealSlack + v.series.quadrature_budget;
  v.pass = v.difference <= v.allowance;
  return v;
}

}  // namespace charsum
