#include "charsum/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>
#include <vector>

#include "charsum/errors.hpp"

namespace charsum::quadrature {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule make_gauss_rule(int m) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(m));
  rule.weights.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= m; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (m == 1) p0 = 1.0;
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= m; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    if (m == 1) p0 = 1.0;
    dp = m * (x * p1 - p0) / (x * x - 1.0);
    rule.nodes[static_cast<std::size_t>(i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussRule& gauss_rule(int m) {
  static std::mutex mutex;
  static std::map<int, GaussRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, make_gauss_rule(m)).first;
  return it->second;
}

// 15-point Kronrod extension of the 7-point Gauss rule.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr int kFilonPoints = 24;

struct FilonBasis {
  const GaussRule* rule;
  // legendre[k][i] = P_k(x_i)
  std::vector<std::array<double, kFilonPoints>> legendre;
};

const FilonBasis& filon_basis() {
  static const FilonBasis basis = [] {
    FilonBasis b;
    b.rule = &gauss_rule(kFilonPoints);
    b.legendre.resize(kFilonPoints);
    for (int i = 0; i < kFilonPoints; ++i) {
      const double x = b.rule->nodes[static_cast<std::size_t>(i)];
      double p0 = 1.0, p1 = x;
      b.legendre[0][static_cast<std::size_t>(i)] = 1.0;
      if (kFilonPoints > 1) b.legendre[1][static_cast<std::size_t>(i)] = x;
      for (int k = 1; k + 1 < kFilonPoints; ++k) {
        const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
        b.legendre[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(i)] = p2;
      }
    }
    return b;
  }();
  return basis;
}

// Spherical Bessel j_0 .. j_{count-1} at theta > 0.
std::array<double, kFilonPoints> spherical_bessel(double theta) {
  std::array<double, kFilonPoints> j{};
  const double s = std::sin(theta), c = std::cos(theta);
  const double j0 = s / theta;
  const double j1 = s / (theta * theta) - c / theta;
  if (theta > kFilonPoints) {
    // upward recurrence is stable while k < theta
    j[0] = j0;
    j[1] = j1;
    for (int k = 1; k + 1 < kFilonPoints; ++k) j[static_cast<std::size_t>(k + 1)] = (2.0 * k + 1.0) / theta * j[static_cast<std::size_t>(k)] - j[static_cast<std::size_t>(k - 1)];
    return j;
  }
  // Miller's downward recurrence, normalized against the closed forms
  const int start = 2 * kFilonPoints + 20 + static_cast<int>(theta);
  double next = 0.0, cur = 1e-300;
  std::vector<double> trial(static_cast<std::size_t>(kFilonPoints));
  for (int k = start; k > 0; --k) {
    const double prev = (2.0 * k + 1.0) / theta * cur - next;
    next = cur;
    cur = prev;
    if (std::abs(cur) > 1e200) {
      cur *= 1e-200;
      next *= 1e-200;
      for (auto& t : trial) t *= 1e-200;
    }
    if (k - 1 < kFilonPoints) trial[static_cast<std::size_t>(k - 1)] = cur;
  }
  const double scale = std::abs(j0) >= std::abs(j1) ? j0 / trial[0] : j1 / trial[1];
  for (int k = 0; k < kFilonPoints; ++k) j[static_cast<std::size_t>(k)] = trial[static_cast<std::size_t>(k)] * scale;
  return j;
}

struct Cell {
  double a;
  double b;
  double value;
  double error;     // truncation estimate; drives refinement
  double roundoff;  // evaluation noise floor; refinement cannot reduce it
  bool operator<(const Cell& other) const { return error < other.error; }
};

class CellRule {
 public:
  CellRule(const std::function<double(double)>& g, std::int64_t n, Weight w, double threshold)
      : g_(g), n_(n), w_(w), threshold_(threshold) {}

  Cell evaluate(double a, double b) const {
    const double len = b - a;
    if (kTwoPi * static_cast<double>(n_) * len > threshold_) return filon(a, b);
    return kronrod(a, b);
  }

 private:
  double weight(double t) const {
    const double phase = kTwoPi * static_cast<double>(n_) * t;
    return w_ == Weight::Cos ? std::cos(phase) : std::sin(phase);
  }

  Cell kronrod(double a, double b) const {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    auto f = [&](double t) { return g_(t) * weight(t); };
    const double fc = f(c);
    double kron = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
      const double dx = h * kXgk[static_cast<std::size_t>(j)];
      const double sum = f(c - dx) + f(c + dx);
      kron += kWgk[static_cast<std::size_t>(j)] * sum;
      if (j % 2 == 1) gauss += kWg[static_cast<std::size_t>(j / 2)] * sum;
    }
    kron *= h;
    gauss *= h;
    double fmax = 0.0;
    for (int j = 0; j < 7; ++j) fmax = std::max({fmax, std::abs(g_(c - h * kXgk[static_cast<std::size_t>(j)]))});
    return {a, b, kron, std::abs(kron - gauss),
            50.0 * std::numeric_limits<double>::epsilon() * 2.0 * h * std::max(fmax, std::abs(g_(c)))};
  }

  // Filon-type rule: expand g in Legendre polynomials on the cell and integrate
  // each P_k against the exponential exactly, int_{-1}^{1} P_k e^{i theta x} = 2 i^k j_k(theta).
  Cell filon(double a, double b) const {
    const auto& basis = filon_basis();
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    std::array<double, kFilonPoints> values{};
    double gmax = 0.0;
    for (int i = 0; i < kFilonPoints; ++i) {
      values[static_cast<std::size_t>(i)] = g_(c + h * basis.rule->nodes[static_cast<std::size_t>(i)]);
      gmax = std::max(gmax, std::abs(values[static_cast<std::size_t>(i)]));
    }
    std::array<double, kFilonPoints> coeff{};
    for (int k = 0; k < kFilonPoints; ++k) {
      double s = 0.0;
      for (int i = 0; i < kFilonPoints; ++i) {
        s += basis.rule->weights[static_cast<std::size_t>(i)] * values[static_cast<std::size_t>(i)] *
             basis.legendre[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
      }
      coeff[static_cast<std::size_t>(k)] = 0.5 * (2.0 * k + 1.0) * s;
    }
    const double theta = std::numbers::pi * static_cast<double>(n_) * (b - a);
    const auto jk = spherical_bessel(theta);
    static constexpr std::complex<double> kPowI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::complex<double> sum{};
    for (int k = 0; k < kFilonPoints; ++k) {
      sum += coeff[static_cast<std::size_t>(k)] * 2.0 * kPowI[k % 4] * jk[static_cast<std::size_t>(k)];
    }
    // e^{2 pi i n c} with the phase reduced before scaling
    const double turns = static_cast<double>(n_) * c;
    const double frac = turns - std::floor(turns);
    const std::complex<double> center(std::cos(kTwoPi * frac), std::sin(kTwoPi * frac));
    const std::complex<double> integral = h * center * sum;
    const double value = w_ == Weight::Cos ? integral.real() : integral.imag();
    const double tail = std::abs(coeff[kFilonPoints - 1]) + std::abs(coeff[kFilonPoints - 2]);
    return {a, b, value, 2.0 * h * tail, 2.0 * h * 50.0 * std::numeric_limits<double>::epsilon() * gmax};
  }

  const std::function<double(double)>& g_;
  std::int64_t n_;
  Weight w_;
  double threshold_;
};

}  // namespace

double gauss_legendre(const std::function<double(double)>& g, double a, double b, int points) {
  if (points < 1 || points > 64) throw DomainError("Gauss-Legendre order must be in [1, 64]");
  const auto& rule = gauss_rule(points);
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < points; ++i) {
    sum += rule.weights[static_cast<std::size_t>(i)] * g(c + h * rule.nodes[static_cast<std::size_t>(i)]);
  }
  return h * sum;
}

Result fourier_integral(const std::function<double(double)>& g, double a, double b, std::int64_t n, Weight w,
                        const Options& options) {
  if (!(b > a)) throw DomainError("fourier_integral requires a < b");
  const CellRule rule(g, n, w, options.filon_threshold);

  // Initial mesh, graded geometrically toward singular endpoints.
  constexpr int kGrading = 60;
  std::vector<double> breaks{a, b};
  if (options.singular_left || options.singular_right) {
    breaks.clear();
    const double mid = 0.5 * (a + b);
    breaks.push_back(a);
    if (options.singular_left) {
      for (int j = kGrading; j >= 1; --j) breaks.push_back(a + (mid - a) * std::ldexp(1.0, -j));
    }
    breaks.push_back(mid);
    if (options.singular_right) {
      for (int j = 1; j <= kGrading; ++j) breaks.push_back(b - (b - mid) * std::ldexp(1.0, -j));
    }
    breaks.push_back(b);
  }

  std::priority_queue<Cell> queue;
  double total = 0.0, total_error = 0.0, roundoff = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    Cell cell = rule.evaluate(breaks[i], breaks[i + 1]);
    total += cell.value;
    total_error += cell.error;
    roundoff += cell.roundoff;
    queue.push(cell);
  }

  int cells = static_cast<int>(queue.size());
  // A tolerance below the accumulated roundoff is met once truncation drops under it.
  while (total_error > std::max({options.abs_tol, options.rel_tol * std::abs(total), roundoff})) {
    if (cells >= options.max_cells) {
      throw NumericalError("Fourier coefficient quadrature did not converge within " +
                               std::to_string(options.max_cells) + " cells",
                           total_error + roundoff);
    }
    const Cell worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw NumericalError("Fourier coefficient quadrature reached the resolution limit", total_error + roundoff);
    }
    const Cell left = rule.evaluate(worst.a, mid);
    const Cell right = rule.evaluate(mid, worst.b);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    roundoff += left.roundoff + right.roundoff - worst.roundoff;
    queue.push(left);
    queue.push(right);
    ++cells;
  }
  // re-add to limit drift from the incremental updates
  double fresh = 0.0, fresh_error = 0.0;
  while (!queue.empty()) {
    fresh += queue.top().value;
    fresh_error += queue.top().error + queue.top().roundoff;
    queue.pop();
  }
  return {fresh, fresh_error, cells};
}

}  // namespace charsum::quadrature
