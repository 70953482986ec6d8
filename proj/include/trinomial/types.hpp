#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace trinomial {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// z^n by binary exponentiation, n >= 0.
inline Complex pow_int(Complex z, int n) {
  Complex result(1.0, 0.0);
  Complex base = z;
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) result *= base;
    base *= base;
  }
  return result;
}

// exp(2*pi*i * num/den), exact on the four axis points so that the featured
// branches (omega = 1, -1, +-i) carry no spurious rounding.
inline Complex root_of_unity(long num, long den) {
  long r = num % den;
  if (r < 0) r += den;
  if (r == 0) return {1.0, 0.0};
  if (2 * r == den) return {-1.0, 0.0};
  if (4 * r == den) return {0.0, 1.0};
  if (4 * r == 3 * den) return {0.0, -1.0};
  const double theta =
      2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(den);
  return {std::cos(theta), std::sin(theta)};
}

}  // namespace trinomial
