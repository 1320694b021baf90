#include "charsum/series.hpp"

#include <algorithm>
#include <numeric>

#include "charsum/errors.hpp"

namespace charsum {

namespace {

// Delta^j c(M+1) = sum_i (-1)^i binom(j, i) c(M+1+i)
double forward_difference(std::span<const double> c, int order) {
  double binom = 1.0;
  double sum = 0.0;
  for (int i = 0; i <= order; ++i) {
    sum += ((i % 2 == 0) ? binom : -binom) * c[static_cast<std::size_t>(i)];
    binom = binom * (order - i) / (i + 1);
  }
  return sum;
}

}  // namespace

PeriodicTail::PeriodicTail(std::vector<std::complex<double>> period, int levels)
    : period_(std::move(period)), levels_(levels) {
  if (period_.empty()) throw DomainError("periodic weight needs a non-empty period");
  if (levels_ < 0) throw DomainError("acceleration level must be non-negative");
  const auto q = period_.size();

  std::complex<double> total{};
  double scale = 0.0;
  for (auto v : period_) {
    total += v;
    scale += std::abs(v);
  }
  if (std::abs(total) > 1e-9 * std::max(1.0, scale)) {
    throw DomainError("periodic weight must have zero mean over a period");
  }

  // Level 0 starts at n = M + 1 = 1 (mod q).
  std::vector<std::complex<double>> level(q);
  for (std::size_t j = 0; j < q; ++j) level[j] = period_[(j + 1) % q];
  level.back() -= total;  // remove rounding residue so every level is exactly periodic

  for (int k = 1; k <= levels_ + 1; ++k) {
    std::complex<double> running{};
    double largest = 0.0;
    for (std::size_t j = 0; j < q; ++j) {
      running += level[j];
      level[j] = running;
      largest = std::max(largest, std::abs(running));
    }
    if (k == 1) partial_sum_bound_ = largest;
    if (k == levels_ + 1) {
      remainder_scale_ = largest;
      break;
    }
    const std::complex<double> mean =
        std::accumulate(level.begin(), level.end(), std::complex<double>{}) / static_cast<double>(q);
    means_.push_back(mean);
    for (auto& v : level) v -= mean;
  }
}

TailEstimate PeriodicTail::estimate(std::span<const double> c, double coefficient_rel_error) const {
  if (c.size() < static_cast<std::size_t>(levels_ + 1)) throw DomainError("tail estimate needs K + 1 coefficients");
  double cmax = 0.0;
  for (int i = 0; i <= levels_; ++i) cmax = std::max(cmax, std::abs(c[static_cast<std::size_t>(i)]));

  TailEstimate est;
  double noise = 0.0;
  for (int k = 1; k <= levels_; ++k) {
    est.correction += means_[static_cast<std::size_t>(k - 1)] * forward_difference(c, k - 1);
    noise += std::abs(means_[static_cast<std::size_t>(k - 1)]) * std::ldexp(1.0, k - 1);
  }
  noise += remainder_scale_ * std::ldexp(1.0, levels_);
  est.bound = remainder_scale_ * std::abs(forward_difference(c, levels_)) + noise * coefficient_rel_error * cmax;
  return est;
}

SeriesSum accelerated_sum(const PeriodicTail& tail, const CoefficientFn& c, const AcceleratedSumOptions& options) {
  const std::int64_t q = tail.period_length();
  const auto lookahead = static_cast<std::size_t>(tail.levels() + 1);

  SeriesSum out;
  std::vector<double>& cs = out.coefficients;  // cs[n - 1] = c(n)
  auto ensure = [&](std::int64_t n) {
    while (static_cast<std::int64_t>(cs.size()) < n) cs.push_back(c(static_cast<std::int64_t>(cs.size()) + 1));
  };

  CompensatedSum partial;
  std::int64_t m = 0;
  TailEstimate est;
  while (true) {
    ensure(m + q);
    for (std::int64_t n = m + 1; n <= m + q; ++n) partial.add(tail.at(n) * cs[static_cast<std::size_t>(n - 1)]);
    m += q;
    if (m < options.min_terms && m + q <= options.terms_cap) continue;

    ensure(m + static_cast<std::int64_t>(lookahead));
    est = tail.estimate(std::span<const double>(cs).subspan(static_cast<std::size_t>(m), lookahead),
                        options.coefficient_rel_error);
    if (est.bound <= options.target) {
      out.converged = true;
      break;
    }
    if (m + q > options.terms_cap) break;
  }
  out.value = partial.value() + est.correction;
  out.terms = m;
  out.tail_bound = est.bound;
  return out;
}

std::vector<std::complex<double>> cesaro_means(std::span<const std::complex<double>> period, const CoefficientFn& c,
                                               std::span<const std::int64_t> windows) {
  if (period.empty()) throw DomainError("periodic weight needs a non-empty period");
  std::int64_t last = 0;
  for (auto w : windows) {
    if (w < 1) throw DomainError("Cesaro window must be positive");
    last = std::max(last, 2 * w);
  }
  const auto q = static_cast<std::int64_t>(period.size());
  std::vector<CompensatedSum> window_sums(windows.size());
  CompensatedSum partial;
  for (std::int64_t n = 1; n <= last; ++n) {
    const auto a = period[static_cast<std::size_t>(n % q)];
    if (a != std::complex<double>{}) partial.add(a * c(n));
    const auto s = partial.value();
    for (std::size_t i = 0; i < windows.size(); ++i) {
      if (n >= windows[i] && n <= 2 * windows[i]) window_sums[i].add(s);
    }
  }
  std::vector<std::complex<double>> out(windows.size());
  for (std::size_t i = 0; i < windows.size(); ++i) {
    out[i] = window_sums[i].value() / static_cast<double>(windows[i] + 1);
  }
  return out;
}

}  // namespace charsum
