#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace trinomial {

// Exact rational with reduced int64 numerator/denominator, den > 0.
// Hypergeometric parameter lists are kept rational so that specs compare by
// value and upper/lower cancellation is exact.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;

  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double value() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }

  bool is_integer() const { return den == 1; }
  bool is_nonpositive_integer() const { return den == 1 && num <= 0; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  friend bool operator==(const Rational&, const Rational&) = default;

  // Values stay tiny here (denominators bounded by N(N-1)), so the cross
  // product cannot overflow.
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
};

}  // namespace trinomial
