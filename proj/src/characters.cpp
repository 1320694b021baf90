#include "charsum/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "charsum/errors.hpp"

namespace charsum {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<WideInt>(a) * b % m);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t m) {
  std::int64_t result = 1 % m;
  base = mod(base, m);
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

// Inverse of a modulo m, gcd(a, m) = 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t quot = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - quot * s);
  }
  return mod(old_s, m);
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    out.emplace_back(p, a);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::int64_t smallest_primitive_root(std::int64_t p, std::int64_t pa) {
  const std::int64_t order = pa / p * (p - 1);
  std::vector<std::int64_t> order_primes;
  for (auto [r, e] : factorize(order)) order_primes.push_back(r);
  for (std::int64_t g = 2; g < pa; ++g) {
    if (g % p == 0) continue;
    bool generates = std::all_of(order_primes.begin(), order_primes.end(),
                                 [&](std::int64_t r) { return pow_mod(g, order / r, pa) != 1; });
    if (generates) return g;
  }
  throw std::logic_error("no primitive root found");
}

int valuation(std::int64_t n, std::int64_t p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::complex<double> unit_root(std::int64_t num, std::int64_t den) {
  std::int64_t r = mod(num, den);
  if ((4 * r) % den == 0) {
    switch ((4 * r) / den) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  if (2 * r > den) r -= den;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t euler_phi(std::int64_t n) {
  if (n <= 0) throw DomainError("euler_phi requires n >= 1");
  std::int64_t result = n;
  for (auto [p, a] : factorize(n)) result = result / p * (p - 1);
  return result;
}

bool is_squarefree(std::int64_t n) {
  if (n == 0) return false;
  for (auto [p, a] : factorize(n < 0 ? -n : n)) {
    if (a > 1) return false;
  }
  return true;
}

std::string CharacterLabel::str() const { return std::to_string(modulus) + ":" + std::to_string(index); }

// ---------------------------------------------------------------------------
// DirichletCharacter

DirichletCharacter::DirichletCharacter(std::int64_t modulus, std::int64_t denominator,
                                       std::vector<std::int32_t> turns, std::vector<std::int64_t> exponents,
                                       std::vector<std::int64_t> orders, std::int64_t index,
                                       std::int64_t conductor)
    : modulus_(modulus),
      denominator_(denominator),
      turns_(std::move(turns)),
      exponents_(std::move(exponents)),
      orders_(std::move(orders)),
      label_{modulus, index},
      conductor_(conductor) {
  if (modulus_ < 1 || static_cast<std::int64_t>(turns_.size()) != modulus_ || denominator_ < 1) {
    throw std::invalid_argument("inconsistent character table");
  }
  const std::int32_t minus_one = turns_[static_cast<std::size_t>(modulus_ - 1)];
  parity_ = (minus_one == 0) ? Parity::Even : Parity::Odd;
  is_real_ = std::all_of(turns_.begin(), turns_.end(), [&](std::int32_t t) {
    return t == kZero || (2 * static_cast<std::int64_t>(t)) % denominator_ == 0;
  });
}

std::int64_t DirichletCharacter::reduce(std::int64_t k) const { return mod(k, modulus_); }

std::optional<DirichletCharacter::Turn> DirichletCharacter::turn(std::int64_t k) const {
  const std::int32_t t = turns_[static_cast<std::size_t>(reduce(k))];
  if (t == kZero) return std::nullopt;
  return Turn{t, denominator_};
}

std::complex<double> DirichletCharacter::operator()(std::int64_t k) const {
  const std::int32_t t = turns_[static_cast<std::size_t>(reduce(k))];
  if (t == kZero) return {0.0, 0.0};
  return unit_root(t, denominator_);
}

int DirichletCharacter::real_value(std::int64_t k) const {
  if (!is_real_) throw DomainError("character " + label_.str() + " is not real");
  const std::int32_t t = turns_[static_cast<std::size_t>(reduce(k))];
  if (t == kZero) return 0;
  return t == 0 ? 1 : -1;
}

std::vector<std::complex<double>> DirichletCharacter::values() const {
  std::vector<std::complex<double>> out(turns_.size());
  for (std::size_t k = 0; k < turns_.size(); ++k) {
    out[k] = turns_[k] == kZero ? std::complex<double>{} : unit_root(turns_[k], denominator_);
  }
  return out;
}

DirichletCharacter DirichletCharacter::conjugate() const {
  std::vector<std::int32_t> turns(turns_.size());
  for (std::size_t k = 0; k < turns_.size(); ++k) {
    turns[k] = turns_[k] == kZero ? kZero
                                  : static_cast<std::int32_t>((denominator_ - turns_[k]) % denominator_);
  }
  std::vector<std::int64_t> exponents(exponents_.size());
  std::int64_t index = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    exponents[i] = (orders_[i] - exponents_[i]) % orders_[i];
    index = index * orders_[i] + exponents[i];
  }
  return DirichletCharacter(modulus_, denominator_, std::move(turns), std::move(exponents), orders_, index,
                            conductor_);
}

std::int64_t DirichletCharacter::order() const {
  std::int64_t g = denominator_;
  for (std::int32_t t : turns_) {
    if (t != kZero) g = std::gcd(g, static_cast<std::int64_t>(t));
  }
  return denominator_ / g;
}

// ---------------------------------------------------------------------------
// GroupStructure

GroupStructure::GroupStructure(std::int64_t modulus) : modulus_(modulus) {
  if (modulus < 1) throw DomainError("modulus must be a positive integer");
  if (modulus > kMaxModulus) {
    throw DomainError("modulus " + std::to_string(modulus) + " exceeds the supported ceiling " +
                      std::to_string(kMaxModulus));
  }

  is_unit_.resize(static_cast<std::size_t>(modulus));
  for (std::int64_t k = 0; k < modulus; ++k) is_unit_[static_cast<std::size_t>(k)] = std::gcd(k, modulus) == 1;

  auto lift = [&](std::int64_t g, std::int64_t pa) {
    const std::int64_t rest = modulus / pa;
    if (rest == 1) return mod(g, modulus);
    // x = g + pa * t with x = 1 (mod rest)
    const std::int64_t t = mul_mod(mod(1 - g, rest), inverse_mod(pa, rest), rest);
    return mod(g + pa * t, modulus);
  };

  for (auto [p, a] : factorize(modulus)) {
    std::int64_t pa = 1;
    for (int i = 0; i < a; ++i) pa *= p;

    if (p != 2) {
      const std::int64_t g = smallest_primitive_root(p, pa);
      const std::int64_t order = pa / p * (p - 1);
      std::vector<std::int32_t> logs(static_cast<std::size_t>(pa), -1);
      std::int64_t v = 1;
      for (std::int64_t t = 0; t < order; ++t) {
        logs[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(t);
        v = v * g % pa;
      }
      factors_.push_back({CyclicFactor::Kind::OddPrimePower, p, a, pa, g, order, lift(g, pa)});
      local_logs_.push_back(std::move(logs));
    } else if (a == 2) {
      std::vector<std::int32_t> logs{-1, 0, -1, 1};
      factors_.push_back({CyclicFactor::Kind::TwoMinusOne, 2, 2, 4, 3, 2, lift(3, 4)});
      local_logs_.push_back(std::move(logs));
    } else if (a >= 3) {
      const std::int64_t five_order = pa / 4;
      std::vector<std::int32_t> sign_logs(static_cast<std::size_t>(pa), -1);
      std::vector<std::int32_t> five_logs(static_cast<std::size_t>(pa), -1);
      std::int64_t v = 1;
      for (std::int64_t t = 0; t < five_order; ++t) {
        sign_logs[static_cast<std::size_t>(v)] = 0;
        five_logs[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(t);
        sign_logs[static_cast<std::size_t>(pa - v)] = 1;
        five_logs[static_cast<std::size_t>(pa - v)] = static_cast<std::int32_t>(t);
        v = v * 5 % pa;
      }
      factors_.push_back({CyclicFactor::Kind::TwoMinusOne, 2, a, pa, pa - 1, 2, lift(pa - 1, pa)});
      local_logs_.push_back(std::move(sign_logs));
      factors_.push_back({CyclicFactor::Kind::TwoFive, 2, a, pa, 5, five_order, lift(5, pa)});
      local_logs_.push_back(std::move(five_logs));
    }
    // (Z/2)^* is trivial and contributes no factor.
  }

  for (const auto& f : factors_) {
    size_ *= f.order;
    exponent_ = std::lcm(exponent_, f.order);
  }
}

std::optional<std::int64_t> GroupStructure::discrete_log(std::size_t factor, std::int64_t k) const {
  const std::int64_t r = mod(k, modulus_);
  if (!is_unit_[static_cast<std::size_t>(r)]) return std::nullopt;
  const auto& f = factors_.at(factor);
  return local_logs_[factor][static_cast<std::size_t>(r % f.prime_power)];
}

std::vector<std::int64_t> GroupStructure::exponents_of(std::int64_t index) const {
  if (index < 0 || index >= size_) throw DomainError("character index out of range");
  std::vector<std::int64_t> e(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    e[i] = index % factors_[i].order;
    index /= factors_[i].order;
  }
  return e;
}

std::int64_t GroupStructure::index_of(std::span<const std::int64_t> exponents) const {
  if (exponents.size() != factors_.size()) throw DomainError("exponent vector has the wrong length");
  std::int64_t index = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] >= factors_[i].order) throw DomainError("exponent out of range");
    index = index * factors_[i].order + exponents[i];
  }
  return index;
}

std::int64_t GroupStructure::conductor_of(std::span<const std::int64_t> exponents) const {
  std::int64_t result = 1;
  std::optional<std::int64_t> sign_exponent;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    const std::int64_t local_order = f.order / std::gcd(exponents[i], f.order);
    switch (f.kind) {
      case CyclicFactor::Kind::OddPrimePower:
        if (local_order > 1) {
          std::int64_t c = f.prime;
          for (int v = valuation(local_order, f.prime); v > 0; --v) c *= f.prime;
          result *= c;
        }
        break;
      case CyclicFactor::Kind::TwoMinusOne:
        sign_exponent = exponents[i];
        if (f.exponent == 2 && exponents[i] != 0) result *= 4;
        break;
      case CyclicFactor::Kind::TwoFive:
        if (local_order > 1) {
          // 5 has order 2^j on the character side: conductor 2^(j + 2)
          result *= 4 * local_order;
        } else if (sign_exponent.value_or(0) != 0) {
          result *= 4;
        }
        break;
    }
  }
  return result;
}

DirichletCharacter GroupStructure::character(std::span<const std::int64_t> exponents) const {
  const std::int64_t index = index_of(exponents);
  std::vector<std::int64_t> weights(factors_.size());
  std::vector<std::int64_t> orders(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    weights[i] = exponents[i] * (exponent_ / factors_[i].order) % exponent_;
    orders[i] = factors_[i].order;
  }

  std::vector<std::int32_t> turns(static_cast<std::size_t>(modulus_), DirichletCharacter::kZero);
  for (std::int64_t k = 0; k < modulus_; ++k) {
    if (!is_unit_[static_cast<std::size_t>(k)]) continue;
    std::int64_t t = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const std::int64_t lg = local_logs_[i][static_cast<std::size_t>(k % factors_[i].prime_power)];
      t = (t + weights[i] * lg) % exponent_;
    }
    turns[static_cast<std::size_t>(k)] = static_cast<std::int32_t>(t);
  }
  return DirichletCharacter(modulus_, exponent_, std::move(turns),
                            std::vector<std::int64_t>(exponents.begin(), exponents.end()), std::move(orders),
                            index, conductor_of(exponents));
}

DirichletCharacter GroupStructure::character(std::int64_t index) const {
  auto e = exponents_of(index);
  return character(std::span<const std::int64_t>(e));
}

// ---------------------------------------------------------------------------
// CharacterGroup

CharacterGroup::CharacterGroup(std::int64_t modulus) : structure_(modulus) {
  if (modulus > kMaxEnumerationModulus) {
    throw DomainError("full enumeration is limited to q <= " + std::to_string(kMaxEnumerationModulus));
  }
  characters_.reserve(static_cast<std::size_t>(structure_.size()));
  for (std::int64_t i = 0; i < structure_.size(); ++i) characters_.push_back(structure_.character(i));
}

std::vector<DirichletCharacter> CharacterGroup::primitive_characters() const {
  std::vector<DirichletCharacter> out;
  std::copy_if(characters_.begin(), characters_.end(), std::back_inserter(out),
               [](const DirichletCharacter& chi) { return chi.is_primitive(); });
  return out;
}

CharacterGroup build_character_group(std::int64_t q) {
  if (q <= 0) throw DomainError("modulus must be a positive integer, got " + std::to_string(q));
  return CharacterGroup(q);
}

std::int64_t conductor(const DirichletCharacter& chi) { return chi.conductor(); }

// ---------------------------------------------------------------------------
// Kronecker symbol and real characters

int kronecker_symbol(std::int64_t a, std::int64_t b) {
  static constexpr int kTab[8] = {0, 1, 0, -1, 0, -1, 0, 1};
  if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && b % 2 == 0) return 0;

  int v = 0;
  while (b % 2 == 0) {
    b /= 2;
    ++v;
  }
  int k = (v % 2 == 0) ? 1 : kTab[a & 7];
  if (b < 0) {
    b = -b;
    if (a < 0) k = -k;
  }
  a = mod(a, b);
  while (a != 0) {
    v = 0;
    while (a % 2 == 0) {
      a /= 2;
      ++v;
    }
    if (v % 2 == 1) k *= kTab[b & 7];
    if (a & b & 2) k = -k;
    const std::int64_t r = a;
    a = b % r;
    b = r;
  }
  return b == 1 ? k : 0;
}

std::optional<std::string> fundamental_discriminant_violation(std::int64_t d) {
  if (d == 0 || d == 1) return "d must differ from 0 and 1";
  const std::int64_t r = mod(d, 4);
  if (r == 1) {
    if (!is_squarefree(d)) return "d = 1 (mod 4) must be squarefree";
    return std::nullopt;
  }
  if (r == 0) {
    const std::int64_t m = d / 4;
    const std::int64_t mr = mod(m, 4);
    if (mr != 2 && mr != 3) return "d = 4m requires m = 2 or 3 (mod 4)";
    if (!is_squarefree(m)) return "d = 4m requires m squarefree";
    return std::nullopt;
  }
  return "d = 2 or 3 (mod 4) is never a discriminant";
}

bool is_fundamental_discriminant(std::int64_t d) { return !fundamental_discriminant_violation(d).has_value(); }

std::vector<std::int64_t> fundamental_discriminants(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t a = std::max<std::int64_t>(lo, 1); a <= hi; ++a) {
    if (is_fundamental_discriminant(-a)) out.push_back(-a);
    if (is_fundamental_discriminant(a)) out.push_back(a);
  }
  return out;
}

DirichletCharacter real_primitive_character(std::int64_t d) {
  if (auto why = fundamental_discriminant_violation(d)) {
    throw DomainError(std::to_string(d) + " is not a fundamental discriminant: " + *why);
  }
  const std::int64_t q = d < 0 ? -d : d;
  GroupStructure group(q);

  std::vector<std::int64_t> exponents;
  for (const auto& f : group.factors()) {
    exponents.push_back(kronecker_symbol(d, f.lifted) == 1 ? 0 : f.order / 2);
  }
  DirichletCharacter chi = group.character(std::span<const std::int64_t>(exponents));

  for (std::int64_t k = 0; k < q; ++k) {
    if (chi.real_value(k) != kronecker_symbol(d, k)) {
      throw std::logic_error("Kronecker character mismatch for d = " + std::to_string(d));
    }
  }
  if (!chi.is_primitive() || (chi.parity() == Parity::Odd) != (d < 0)) {
    throw std::logic_error("Kronecker character for d = " + std::to_string(d) + " is not primitive");
  }
  return chi;
}

}  // namespace charsum
