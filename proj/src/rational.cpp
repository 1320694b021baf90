#include "charsum/rational.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>

#include "charsum/errors.hpp"

namespace charsum {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw DomainError("not a rational number: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n, d);
  num = n / g;
  den = d / g;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational Rational::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(parse_int(text, text), 1);

  bool negative = !text.empty() && text.front() == '-';
  std::string_view int_part = text.substr(negative ? 1 : 0, dot - (negative ? 1 : 0));
  std::string_view frac_part = text.substr(dot + 1);
  if (frac_part.size() > 15 || (int_part.empty() && frac_part.empty())) {
    throw DomainError("not a rational number: '" + std::string(text) + "'");
  }
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
  std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, text);
  std::int64_t frac = frac_part.empty() ? 0 : parse_int(frac_part, text);
  if (whole < 0 || frac < 0) throw DomainError("not a rational number: '" + std::string(text) + "'");
  std::int64_t n = whole * scale + frac;
  return Rational(negative ? -n : n, scale);
}

}  // namespace charsum
