#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "charsum/characters.hpp"
#include "charsum/errors.hpp"
#include "charsum/series.hpp"

using namespace charsum;

namespace {

constexpr double kPi = std::numbers::pi;

// sum_{n=1}^{N} a(n) c(n) in long double, plus the trivial remainder bound.
std::complex<long double> brute_partial(const std::vector<std::complex<double>>& period,
                                        const CoefficientFn& c, std::int64_t terms) {
  std::complex<long double> s;
  const auto q = static_cast<std::int64_t>(period.size());
  for (std::int64_t n = 1; n <= terms; ++n) {
    s += std::complex<long double>(period[n % q]) * static_cast<long double>(c(n));
  }
  return s;
}

}  // namespace

TEST(CompensatedSum, RecoversCancelledLowBits) {
  CompensatedSum s;
  s.add(1e16);
  for (int i = 0; i < 1000; ++i) s.add(1.0);
  s.add(-1e16);
  EXPECT_EQ(s.value().real(), 1000.0);
}

TEST(PeriodicTail, RejectsNonzeroMean) {
  EXPECT_THROW(PeriodicTail({1.0, 1.0, 1.0}), DomainError);
}

TEST(PeriodicTail, PartialSumBoundIsTheMaximum) {
  // chi_{-4}: partial sums 0, 1, 1, 0 -> max 1.
  PeriodicTail t({0.0, 1.0, 0.0, -1.0}, 0);
  EXPECT_DOUBLE_EQ(t.partial_sum_bound(), 1.0);
  EXPECT_DOUBLE_EQ(t.remainder_scale(), 1.0);
}

// Property: for random zero-mean periods and c(n) = 1/n^p, the accelerated value
// lies within its bound of a long brute-force sum whose own tail is negligible.
TEST(AcceleratedSum, BoundCoversTheTrueError) {
  std::mt19937_64 rng(20261018);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const std::int64_t q = 3 + trial % 11;
    std::vector<std::complex<double>> period(static_cast<std::size_t>(q));
    std::complex<double> mean;
    for (auto& v : period) {
      v = {u(rng), u(rng)};
      mean += v;
    }
    for (auto& v : period) v -= mean / static_cast<double>(q);

    const double power = trial % 2 ? 2.0 : 1.5;
    const CoefficientFn c = [power](std::int64_t n) { return std::pow(static_cast<double>(n), -power); };
    // Brute sum to 4e6 terms; its remaining tail is below max|A_1| * (4e6)^-1.5 ~ 1e-9 * q.
    const std::int64_t long_n = 4'000'000 / q * q;
    const auto truth = brute_partial(period, c, long_n);
    const double truth_slack = 2.0 * q * std::pow(static_cast<double>(long_n), -power);

    for (int levels : {0, 1, 3}) {
      PeriodicTail tail(period, levels);
      const SeriesSum s = accelerated_sum(tail, c, {.target = 1e-6});
      const double err = std::abs(std::complex<long double>(s.value) - truth);
      EXPECT_LE(err, s.tail_bound + truth_slack) << "trial " << trial << " levels " << levels;
      EXPECT_EQ(s.terms % q, 0);
    }
  }
}

TEST(AcceleratedSum, MoreLevelsNeedFewerTerms) {
  const auto chi = real_primitive_character(-7);
  const CoefficientFn inv = [](std::int64_t n) { return 1.0 / static_cast<double>(n); };
  std::int64_t previous = 1 << 30;
  for (int levels : {0, 1, 2, 3}) {
    const SeriesSum s = accelerated_sum(PeriodicTail(chi.values(), levels), inv, {.target = 1e-6, .terms_cap = 10'000'000});
    EXPECT_TRUE(s.converged);
    EXPECT_NEAR(s.value.real(), kPi / std::sqrt(7.0), 1e-6);
    EXPECT_LT(s.terms, previous);
    previous = s.terms;
  }
}

TEST(AcceleratedSum, ReportsNonConvergenceAtTheCap) {
  const auto chi = real_primitive_character(-3);
  const SeriesSum s = accelerated_sum(PeriodicTail(chi.values(), 0),
                                      [](std::int64_t n) { return 1.0 / static_cast<double>(n); },
                                      {.target = 1e-12, .terms_cap = 300});
  EXPECT_FALSE(s.converged);
  EXPECT_GT(s.tail_bound, 1e-12);
  EXPECT_LE(s.terms, 300);
}

TEST(CesaroMeans, AveragesPartialSums) {
  // a = (0, 1, -1) periodic, c = 1: S_M cycles 1, 0, 0 for M = 1, 2, 3 (mod 3).
  const std::vector<std::complex<double>> period = {0.0, 1.0, -1.0};
  const std::int64_t windows[] = {3, 30};
  const auto m = cesaro_means(period, [](std::int64_t) { return 1.0; }, windows);
  // M in [3, 6]: S = 0, 1, 0, 0 -> 1/4.
  EXPECT_DOUBLE_EQ(m[0].real(), 0.25);
  // M in [30, 60]: 31 values, S_M = 1 for M = 31, 34, ..., 58 -> 10 ones.
  EXPECT_DOUBLE_EQ(m[1].real(), 10.0 / 31.0);
}
