#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace ffgeom {

/// Exact nonnegative-denominator rational used for reported thresholds.
/// Comparisons cross-multiply in 128-bit, so every operand up to 2^63 is safe.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::int64_t floor() const {
    std::int64_t f = num / den;
    if (num % den != 0 && num < 0) --f;
    return f;
  }
  std::int64_t ceil() const { return -Rational(-num, den).floor(); }

  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num) * b.den;
    const __int128 rhs = static_cast<__int128>(b.num) * a.den;
    return lhs <=> rhs;
  }
  friend bool operator==(const Rational& a, const Rational& b) { return (a <=> b) == 0; }
};

}  // namespace ffgeom
