#pragma once

#include <complex>
#include <cstdint>

#include "charsum/characters.hpp"

namespace charsum {

// Exactness tolerance for Gauss-sum identities at q <= 10^4.
inline constexpr double kGaussTolerance = 1e-9;

struct GaussSumValue {
  std::complex<double> value;
  std::int64_t modulus = 0;
  std::int64_t twist = 0;
  CharacterLabel label;
  double residual = 0.0;  // largest deviation seen in an attached exactness check
};

// G(n, chi) = sum_{k=1}^{q-1} chi(k) e(kn/q). Each term's phase is reduced
// exactly to a single turn fraction before materializing it.
GaussSumValue gauss_sum(const DirichletCharacter& chi, std::int64_t n);

// tau(chi) = G(1, chi).
GaussSumValue tau(const DirichletCharacter& chi);

// |G(n, chi) - conj(chi(n)) tau(chi)|; chi must be primitive.
double check_lemma1(const DirichletCharacter& chi, std::int64_t n);

// Largest check_lemma1 residual over 0 <= n < q.
double check_lemma1_all(const DirichletCharacter& chi);

// |tau(chi_d) - sqrt(q)| for d > 0, |tau(chi_d) - i sqrt(q)| for d < 0.
double check_lemma2(std::int64_t d);

}  // namespace charsum
