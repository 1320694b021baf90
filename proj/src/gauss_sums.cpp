#include "charsum/gauss_sums.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "charsum/errors.hpp"

namespace charsum {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void require_primitive(const DirichletCharacter& chi, const char* what) {
  if (!chi.is_primitive()) {
    throw DomainError(std::string(what) + " requires a primitive character; " + chi.label().str() +
                      " has conductor " + std::to_string(chi.conductor()));
  }
}

}  // namespace

GaussSumValue gauss_sum(const DirichletCharacter& chi, std::int64_t n) {
  const std::int64_t q = chi.modulus();
  const std::int64_t den = chi.denominator();
  // chi(k) e(kn/q) = e(t_k/den + (kn mod q)/q) = e(m / lcm(den, q))
  const std::int64_t common = std::lcm(den, q);
  const std::int64_t scale_turn = common / den;
  const std::int64_t scale_phase = common / q;
  const std::int64_t nr = mod(n, q);

  std::complex<double> sum{};
  auto turns = chi.turn_table();
  // k = 0 only counts when q = 1.
  for (std::int64_t k = 0; k < q; ++k) {
    const std::int32_t t = turns[static_cast<std::size_t>(k)];
    if (t == DirichletCharacter::kZero) continue;
    const std::int64_t phase = (k * nr) % q;
    sum += unit_root((t * scale_turn + phase * scale_phase) % common, common);
  }
  return GaussSumValue{sum, q, n, chi.label(), 0.0};
}

GaussSumValue tau(const DirichletCharacter& chi) { return gauss_sum(chi, 1); }

double check_lemma1(const DirichletCharacter& chi, std::int64_t n) {
  require_primitive(chi, "separability of G(n, chi)");
  const auto g = gauss_sum(chi, n).value;
  const auto t = tau(chi).value;
  return std::abs(g - std::conj(chi(n)) * t);
}

double check_lemma1_all(const DirichletCharacter& chi) {
  require_primitive(chi, "separability of G(n, chi)");
  const auto t = tau(chi).value;
  double worst = 0.0;
  for (std::int64_t n = 0; n < chi.modulus(); ++n) {
    worst = std::max(worst, std::abs(gauss_sum(chi, n).value - std::conj(chi(n)) * t));
  }
  return worst;
}

double check_lemma2(std::int64_t d) {
  const DirichletCharacter chi = real_primitive_character(d);
  const double root = std::sqrt(static_cast<double>(chi.modulus()));
  const std::complex<double> expected = d > 0 ? std::complex<double>(root, 0.0) : std::complex<double>(0.0, root);
  return std::abs(tau(chi).value - expected);
}

}  // namespace charsum
