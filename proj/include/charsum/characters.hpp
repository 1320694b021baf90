#pragma once

/**
 * @file characters.hpp
 * @brief Dirichlet characters modulo q.
 *
 * A character is stored as an exact table of turn fractions: chi(k) = e(t_k / D)
 * where D is the exponent lambda(q) of (Z/qZ)^* and e(x) = exp(2 pi i x).
 * Non-units carry the sentinel kZero. Complex values are materialized only
 * on request, so multiplicativity and orthogonality can be checked exactly
 * on the integer table.
 *
 * The unit group is decomposed into cyclic factors on canonical generators:
 * the smallest primitive root for each odd prime power p^a, the single
 * generator -1 for 4, and the pair {-1, 5} for 2^a with a >= 3. Characters
 * are enumerated in lexicographic order of their exponent vectors on these
 * generators; the position in that order is the character's index.
 */

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace charsum {

enum class Parity { Even, Odd };

const char* to_string(Parity p);

// Largest modulus accepted by GroupStructure (tables are O(q)).
inline constexpr std::int64_t kMaxModulus = 1'000'000;
// Largest modulus for full group enumeration (O(q * phi(q)) storage).
inline constexpr std::int64_t kMaxEnumerationModulus = 10'000;

// e(num / den), exact for multiples of a quarter turn.
std::complex<double> unit_root(std::int64_t num, std::int64_t den);

// 128-bit intermediate for products of 64-bit residues.
__extension__ typedef __int128 WideInt;

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t euler_phi(std::int64_t n);
bool is_squarefree(std::int64_t n);

struct CharacterLabel {
  std::int64_t modulus = 1;
  std::int64_t index = 0;

  std::string str() const;  // "q:index"
  friend bool operator==(const CharacterLabel&, const CharacterLabel&) = default;
};

class DirichletCharacter {
 public:
  static constexpr std::int32_t kZero = -1;

  struct Turn {
    std::int64_t num;  // in [0, den)
    std::int64_t den;
  };

  // Normally obtained from GroupStructure::character; `orders` are the cyclic factor orders
  // that `exponents` refer to.
  DirichletCharacter(std::int64_t modulus, std::int64_t denominator, std::vector<std::int32_t> turns,
                     std::vector<std::int64_t> exponents, std::vector<std::int64_t> orders,
                     std::int64_t index, std::int64_t conductor);

  std::int64_t modulus() const { return modulus_; }
  std::int64_t denominator() const { return denominator_; }
  std::int64_t conductor() const { return conductor_; }
  bool is_primitive() const { return conductor_ == modulus_; }
  bool is_principal() const { return conductor_ == 1; }
  bool is_real() const { return is_real_; }
  Parity parity() const { return parity_; }
  const CharacterLabel& label() const { return label_; }
  const std::vector<std::int64_t>& exponents() const { return exponents_; }

  // Raw numerators modulo denominator(); kZero on non-units.
  std::span<const std::int32_t> turn_table() const { return turns_; }

  std::optional<Turn> turn(std::int64_t k) const;
  std::complex<double> operator()(std::int64_t k) const;

  // -1, 0 or 1; throws DomainError for a non-real character.
  int real_value(std::int64_t k) const;

  // Complex value table indexed by k mod q.
  std::vector<std::complex<double>> values() const;

  DirichletCharacter conjugate() const;

  // Order of the character in the dual group.
  std::int64_t order() const;

 private:
  std::int64_t reduce(std::int64_t k) const;

  std::int64_t modulus_;
  std::int64_t denominator_;
  std::vector<std::int32_t> turns_;
  std::vector<std::int64_t> exponents_;
  std::vector<std::int64_t> orders_;
  CharacterLabel label_;
  std::int64_t conductor_;
  Parity parity_;
  bool is_real_;
};

// One cyclic factor of (Z/qZ)^* on a canonical generator.
struct CyclicFactor {
  enum class Kind { OddPrimePower, TwoMinusOne, TwoFive };

  Kind kind;
  std::int64_t prime;
  int exponent;               // a in p^a
  std::int64_t prime_power;   // p^a
  std::int64_t generator;     // generator modulo p^a
  std::int64_t order;
  std::int64_t lifted;        // generator lifted to Z/qZ by CRT (1 on the other components)
};

// Cyclic decomposition of (Z/qZ)^* with discrete-log tables.
class GroupStructure {
 public:
  explicit GroupStructure(std::int64_t modulus);

  std::int64_t modulus() const { return modulus_; }
  std::int64_t size() const { return size_; }          // phi(q)
  std::int64_t exponent() const { return exponent_; }  // lambda(q)
  const std::vector<CyclicFactor>& factors() const { return factors_; }

  // Discrete log of k on factor i; nullopt when gcd(k, q) > 1.
  std::optional<std::int64_t> discrete_log(std::size_t factor, std::int64_t k) const;

  std::vector<std::int64_t> exponents_of(std::int64_t index) const;
  std::int64_t index_of(std::span<const std::int64_t> exponents) const;

  DirichletCharacter character(std::span<const std::int64_t> exponents) const;
  DirichletCharacter character(std::int64_t index) const;

  // Conductor from the local components of the exponent vector.
  std::int64_t conductor_of(std::span<const std::int64_t> exponents) const;

 private:
  std::int64_t modulus_;
  std::int64_t size_ = 1;
  std::int64_t exponent_ = 1;
  std::vector<CyclicFactor> factors_;
  std::vector<std::vector<std::int32_t>> local_logs_;  // per factor, indexed by residue mod p^a
  std::vector<bool> is_unit_;
};

class CharacterGroup {
 public:
  explicit CharacterGroup(std::int64_t modulus);

  std::int64_t modulus() const { return structure_.modulus(); }
  const GroupStructure& structure() const { return structure_; }
  const std::vector<DirichletCharacter>& characters() const { return characters_; }
  std::vector<DirichletCharacter> primitive_characters() const;

 private:
  GroupStructure structure_;
  std::vector<DirichletCharacter> characters_;
};

// All phi(q) characters mod q; q = 0 or q > kMaxEnumerationModulus is a DomainError.
CharacterGroup build_character_group(std::int64_t q);

std::int64_t conductor(const DirichletCharacter& chi);

// Kronecker symbol (d/n); total on integers.
int kronecker_symbol(std::int64_t d, std::int64_t n);

// Empty when d is a fundamental discriminant, else the violated condition.
std::optional<std::string> fundamental_discriminant_violation(std::int64_t d);
bool is_fundamental_discriminant(std::int64_t d);

// Fundamental discriminants with lo <= |d| <= hi, ordered by (|d|, negative first).
std::vector<std::int64_t> fundamental_discriminants(std::int64_t lo, std::int64_t hi);

// The primitive real character n -> (d/n) modulo |d|.
DirichletCharacter real_primitive_character(std::int64_t d);

}  // namespace charsum
