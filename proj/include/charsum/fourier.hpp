#pragma once

/**
 * @file fourier.hpp
 * @brief Character sums sum_{k=1}^{q-1} chi(k) f*(k/q) by direct summation and
 *        by their Fourier-series expansion.
 *
 * For a primitive character chi mod q and f of bounded variation on [0, 1],
 *
 *   even chi:  sum chi(k) f*(k/q) =  2 tau(chi)  sum_{n>=1} conj(chi(n)) a_n,
 *   odd chi:   sum chi(k) f*(k/q) = -2i tau(chi) sum_{n>=1} conj(chi(n)) b_n,
 *
 * with a_n = int_0^1 f(t) cos(2 pi n t) dt and b_n = int_0^1 f(t) sin(2 pi n t) dt.
 * Only the branch selected by the parity is ever evaluated.
 *
 * Smooth functions (VariationClass::SmoothC2) are summed with the periodic
 * summation-by-parts acceleration in series.hpp and carry a rigorous tail
 * bound. Jump functions and log t converge slowly and oscillate; they are
 * evaluated as Cesaro means of the partial sums over [N, 2N], and their
 * tail_bound is the envelope estimate 2 * max|A_1| * C / N, where C bounds
 * n |c_n| on the window.
 */

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "charsum/characters.hpp"
#include "charsum/quadrature.hpp"
#include "charsum/rational.hpp"

namespace charsum {

enum class VariationClass { SmoothC2, PiecewiseSmooth, IntegrableSingularAtZero, UnboundedVariation };
enum class CoefficientKind { Cos, Sin };
enum class ParityBranch { CosineEven, SineOdd };
enum class SummationMethod { Accelerated, CesaroWindow };

const char* to_string(VariationClass c);
const char* to_string(ParityBranch b);
const char* to_string(SummationMethod m);

struct JumpPoint {
  double t;
  double left;   // f(t - 0)
  double right;  // f(t + 0)
};

class FunctionSpec {
 public:
  using Evaluator = std::function<double(double)>;
  using CoefficientFormula = std::function<double(std::int64_t, CoefficientKind)>;

  // Jump points must lie in (0, 1) with finite one-sided limits; they are kept sorted.
  FunctionSpec(std::string name, Evaluator f, VariationClass variation, std::vector<JumpPoint> jumps = {},
               CoefficientFormula closed_form = {}, bool singular_at_zero = false, bool singular_at_one = false);

  const std::string& name() const { return name_; }
  VariationClass variation_class() const { return variation_; }
  const std::vector<JumpPoint>& jump_points() const { return jumps_; }
  bool singular_at_zero() const { return singular_at_zero_; }
  bool singular_at_one() const { return singular_at_one_; }
  bool has_closed_form() const { return static_cast<bool>(closed_form_); }

  double evaluate(double t) const { return f_(t); }
  double closed_form(std::int64_t n, CoefficientKind kind) const { return closed_form_(n, kind); }

  // Same function with the closed-form coefficients dropped (forces quadrature).
  FunctionSpec without_closed_form() const;

  static FunctionSpec square();           // t^2
  static FunctionSpec identity();         // t
  static FunctionSpec centered_linear();  // t - 1/2
  static FunctionSpec exponential();      // e^t
  static FunctionSpec logarithm();        // log t, integrable singularity at 0
  static FunctionSpec step(Rational y);   // 1 on [0, y], 0 on (y, 1)

  // "t2", "t", "exp", "log", "step:<y>" with y as p/q or a decimal.
  static FunctionSpec parse(std::string_view name);

 private:
  std::string name_;
  Evaluator f_;
  VariationClass variation_;
  std::vector<JumpPoint> jumps_;
  CoefficientFormula closed_form_;
  bool singular_at_zero_;
  bool singular_at_one_;
};

// f*(x) for x in (0, 1): the midpoint of the one-sided limits at a jump.
double fstar(const FunctionSpec& f, double x);

// sum_{k=1}^{q-1} chi(k) f*(k/q) in index order; chi primitive, q >= 3.
std::complex<double> direct_sum(const DirichletCharacter& chi, const FunctionSpec& f);

struct CoefficientOptions {
  quadrature::Options quadrature;
};

// int_0^1 f(t) cos(2 pi n t) dt or the sine analogue, n >= 1. Uses the closed
// form when present, else adaptive quadrature split at the jump points.
double fourier_coefficient(const FunctionSpec& f, std::int64_t n, CoefficientKind kind,
                           const CoefficientOptions& options = {});

// Quadrature route only, with its error estimate.
quadrature::Result fourier_coefficient_quadrature(const FunctionSpec& f, std::int64_t n, CoefficientKind kind,
                                                  const CoefficientOptions& options = {});

// Lazily extended coefficient cache for one (f, kind); reuse across characters.
class CoefficientTable {
 public:
  CoefficientTable(const FunctionSpec& f, CoefficientKind kind, CoefficientOptions options = {});

  double operator()(std::int64_t n);  // n >= 1
  CoefficientKind kind() const { return kind_; }
  const FunctionSpec& function() const { return f_; }
  // Relative accuracy of the stored values.
  double relative_error() const;
  // Sum of absolute error estimates over n <= up_to (0 for closed forms).
  double error_budget(std::int64_t up_to) const;
  std::int64_t evaluations() const { return static_cast<std::int64_t>(values_.size()); }

 private:
  FunctionSpec f_;
  CoefficientKind kind_;
  CoefficientOptions options_;
  std::vector<double> values_;
  std::vector<double> errors_;
};

struct SeriesOptions {
  std::int64_t terms_cap = 1'000'000;
  std::int64_t cesaro_window = 10'000;  // N for slowly convergent classes
  int acceleration_levels = 3;
  bool keep_coefficients = false;
};

struct SeriesEvaluation {
  std::complex<double> value;  // prefactor included; real part only for real chi
  std::int64_t terms_used = 0;
  double tail_bound = 0.0;
  bool converged = false;  // tail_bound <= target
  ParityBranch parity_branch = ParityBranch::CosineEven;
  SummationMethod method = SummationMethod::Accelerated;
  double quadrature_budget = 0.0;  // |prefactor| * accumulated coefficient error
  std::vector<double> per_term_coefficients;
  std::string notes;
};

SeriesEvaluation theorem_series(const DirichletCharacter& chi, const FunctionSpec& f, double target_accuracy,
                                const SeriesOptions& options = {});

// Variant reusing a caller-owned coefficient cache (its kind must match the parity).
SeriesEvaluation theorem_series(const DirichletCharacter& chi, CoefficientTable& coefficients, double target_accuracy,
                                const SeriesOptions& options = {});

struct TheoremVerification {
  std::complex<double> direct;
  SeriesEvaluation series;
  double difference = 0.0;
  double allowance = 0.0;  // tail_bound + 1e-9 + quadrature budget
  bool pass = false;
};

TheoremVerification verify_theorem(const DirichletCharacter& chi, const FunctionSpec& f, double target_accuracy,
                                   const SeriesOptions& options = {});
TheoremVerification verify_theorem(const DirichletCharacter& chi, CoefficientTable& coefficients,
                                   double target_accuracy, const SeriesOptions& options = {});

}  // namespace charsum
