#pragma once

/**
 * @file series.hpp
 * @brief Summation of character-weighted series sum_{n>=1} a(n) c(n).
 *
 * Two regimes are supported.
 *
 * Accelerated: a(n) is q-periodic with zero mean over a period and c(n) is a
 * smooth sequence tending to 0 whose differences up to order K are eventually
 * monotone (c = 1/n, 1/n^2, (e-1)/(1+4 pi^2 n^2), ...). Stopping at M = 0
 * (mod q), repeated summation by parts against the periodic partial sums
 * gives
 *
 *   sum_{n>M} a(n) c(n) = sum_{k=1}^{K} abar_k * Delta^{k-1} c(M+1) + R_K,
 *   |R_K| <= max|A_{K+1}| * |Delta^K c(M+1)|,
 *
 * where A_k are the iterated partial sums of a (recentred to zero mean at each
 * level, hence periodic) and abar_k their period means. All constants are
 * computed exactly from one period of a. With K = 0 this is the classical
 * Polya-Vinogradov partial-summation bound max|A_1| * |c(M+1)|.
 *
 * Cesaro: for oscillating coefficient sequences (Fourier coefficients of
 * jump functions, log t) partial sums S_M are averaged over M in [N, 2N].
 */

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace charsum {

// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(std::complex<double> x) {
    re_.add(x.real());
    im_.add(x.imag());
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  struct Part {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
      const double t = sum + x;
      if (std::abs(sum) >= std::abs(x)) {
        carry += (sum - t) + x;
      } else {
        carry += (x - t) + sum;
      }
      sum = t;
    }
    double value() const { return sum + carry; }
  };
  Part re_;
  Part im_;
};

struct TailEstimate {
  std::complex<double> correction;
  double bound = 0.0;
};

class PeriodicTail {
 public:
  // period[r] = a(n) for n = r (mod q). The period sum must vanish.
  explicit PeriodicTail(std::vector<std::complex<double>> period, int levels = 3);

  std::int64_t period_length() const { return static_cast<std::int64_t>(period_.size()); }
  int levels() const { return levels_; }
  std::complex<double> at(std::int64_t n) const { return period_[static_cast<std::size_t>(n % period_length())]; }

  // max_M |sum_{n<=M} a(n)|.
  double partial_sum_bound() const { return partial_sum_bound_; }
  // abar_1 ... abar_K.
  const std::vector<std::complex<double>>& means() const { return means_; }
  // max |A_{K+1}|.
  double remainder_scale() const { return remainder_scale_; }

  // c holds c(M+1), ..., c(M+K+1) for a cut point M = 0 (mod q).
  // coefficient_rel_error is the relative accuracy of those values.
  TailEstimate estimate(std::span<const double> c, double coefficient_rel_error = 4e-16) const;

 private:
  std::vector<std::complex<double>> period_;
  int levels_;
  double partial_sum_bound_ = 0.0;
  std::vector<std::complex<double>> means_;
  double remainder_scale_ = 0.0;
};

struct SeriesSum {
  std::complex<double> value;
  std::int64_t terms = 0;  // the cut point M
  double tail_bound = 0.0;
  bool converged = false;
  std::vector<double> coefficients;  // c(1), ..., c(M + K + 1)
};

using CoefficientFn = std::function<double(std::int64_t)>;

struct AcceleratedSumOptions {
  double target = 1e-10;
  std::int64_t terms_cap = 1'000'000;
  std::int64_t min_terms = 64;
  double coefficient_rel_error = 4e-16;
};

// Sum of a(n) c(n) over n >= 1 with the accelerated tail folded in. Stops at the
// first multiple of q (>= min_terms) whose bound meets the target; otherwise at
// the cap with converged = false.
SeriesSum accelerated_sum(const PeriodicTail& tail, const CoefficientFn& c, const AcceleratedSumOptions& options);

// Mean of the partial sums S_M = sum_{n<=M} a(n) c(n) over window <= M <= 2 window,
// one result per requested window. a is indexed by n mod period.size().
std::vector<std::complex<double>> cesaro_means(std::span<const std::complex<double>> period, const CoefficientFn& c,
                                               std::span<const std::int64_t> windows);

}  // namespace charsum
