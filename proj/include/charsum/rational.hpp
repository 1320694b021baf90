#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace charsum {

// Reduced fraction with positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;

  // Accepts "p/q", an integer, or a finite decimal such as "0.25" (converted exactly).
  static Rational parse(std::string_view text);

  friend bool operator==(const Rational&, const Rational&) = default;
};

}  // namespace charsum
