#pragma once

// Complex log-gamma, the gamma-ratio series coefficient, and a generalized
// hypergeometric series evaluator. Everything else in the library is built
// on these three kernels.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trinomial/errors.hpp"
#include "trinomial/rational.hpp"
#include "trinomial/types.hpp"

namespace trinomial {

// Result of a truncated series evaluation.
struct SeriesResult {
  Complex value{};
  int terms_used = 0;
  double tail_estimate = 0.0;
  bool converged = false;
};

// A generalized hypergeometric series pFq(a1..ap; b1..bq; z). Parameters are
// exact rationals so two specs compare by value.
struct HypergeometricSpec {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
  Complex argument{};

  HypergeometricSpec(std::vector<Rational> a, std::vector<Rational> b, Complex z)
      : upper(std::move(a)), lower(std::move(b)), argument(z) {
    for (const Rational& param : lower) {
      if (param.is_nonpositive_integer())
        throw std::invalid_argument("pFq lower parameter " + param.str() +
                                    " is zero or a negative integer");
    }
  }

  friend bool operator==(const HypergeometricSpec&, const HypergeometricSpec&) = default;
};

namespace detail {

// Lanczos approximation with g = 607/128 and 15 coefficients (Godfrey's
// set); relative error below 1e-13 across the right half-plane.
inline constexpr double lanczos_g = 607.0 / 128.0;
inline constexpr double lanczos_coeff[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

inline constexpr double log_sqrt_two_pi = 0.91893853320467274178;

inline Complex log_gamma_lanczos(Complex z) {
  Complex acc(lanczos_coeff[0], 0.0);
  for (int k = 1; k < 15; ++k)
    acc += lanczos_coeff[k] / (z + Complex(static_cast<double>(k - 1), 0.0));
  const Complex base = z + Complex(lanczos_g - 0.5, 0.0);
  return Complex(log_sqrt_two_pi, 0.0) + (z - Complex(0.5, 0.0)) * std::log(base) -
         base + std::log(acc);
}

}  // namespace detail

// Principal-branch log Gamma(z). The reflection formula extends the Lanczos
// core from Re(z) >= 0.5 to the rest of the plane.
inline Complex log_gamma(Complex z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    throw PoleError("log_gamma: pole at z = " + std::to_string(z.real()));
  if (z.real() < 0.5) {
    const double pi = std::numbers::pi;
    return std::log(pi / std::sin(pi * z)) - log_gamma(Complex(1.0, 0.0) - z);
  }
  return detail::log_gamma_lanczos(z);
}

// log of Gamma(N n/(N-1) + 1) / (Gamma(n+2) Gamma(n/(N-1) + 1)), the n-th
// coefficient of the degree-N inversion series in log form.
inline double gamma_ratio_log(int degree, int n) {
  if (degree < 2) throw std::invalid_argument("gamma_ratio_log: degree must be >= 2");
  if (n < 0) throw std::invalid_argument("gamma_ratio_log: n must be >= 0");
  const double m = static_cast<double>(degree - 1);
  const double nn = static_cast<double>(n);
  const double top = log_gamma(Complex(static_cast<double>(degree) * nn / m + 1.0, 0.0)).real();
  const double mid = log_gamma(Complex(nn + 2.0, 0.0)).real();
  const double bot = log_gamma(Complex(nn / m + 1.0, 0.0)).real();
  return top - mid - bot;
}

// The coefficient itself. Intermediate Gammas cannot overflow because the
// result is assembled from log differences; the ratio grows like
// radius^{-n} and so overflows double past a few hundred terms for small N,
// which is why the series drivers combine it with t^n in log space instead
// of calling this.
inline double gamma_ratio_term(int degree, int n) {
  return std::exp(gamma_ratio_log(degree, n));
}

// Sum the pFq series by the term-ratio recurrence
//   term_{k+1} = term_k * prod(a_i + k) / prod(b_j + k) * z / (k + 1),
// stopping when the geometric tail bound drops below tol or a numerator
// parameter hits a nonpositive integer (polynomial case, exact termination).
//
// Throws DivergenceError outside the convergence domain (p = q+1 with
// |z| > 1, or |z| = 1 without positive parameter excess, unless the series
// terminates) and NonConvergenceError when max_terms is exhausted.
inline SeriesResult pfq(const HypergeometricSpec& spec, double tol, int max_terms) {
  if (!(tol > 0.0)) throw std::invalid_argument("pfq: tol must be positive");
  if (max_terms < 1) throw std::invalid_argument("pfq: max_terms must be >= 1");

  const Complex z = spec.argument;
  if (z == Complex{}) return {Complex(1.0, 0.0), 1, 0.0, true};

  const std::size_t p = spec.upper.size();
  const std::size_t q = spec.lower.size();
  const bool terminates =
      std::any_of(spec.upper.begin(), spec.upper.end(),
                  [](const Rational& a) { return a.is_nonpositive_integer(); });
  if (!terminates) {
    if (p > q + 1)
      throw DivergenceError("pfq: p > q + 1 series diverges for z != 0");
    if (p == q + 1) {
      const double az = std::abs(z);
      if (az > 1.0)
        throw DivergenceError("pfq: |z| = " + std::to_string(az) +
                              " outside the circle of convergence");
      if (az == 1.0) {
        double excess = 0.0;
        for (const Rational& b : spec.lower) excess += b.value();
        for (const Rational& a : spec.upper) excess -= a.value();
        if (!(excess > 0.0))
          throw DivergenceError("pfq: |z| = 1 without positive parameter excess");
      }
    }
  }

  Complex term(1.0, 0.0);
  Complex sum = term;
  int terms_used = 1;
  double prev_mag = 1.0;

  for (int k = 0; terms_used < max_terms; ++k) {
    double num = 1.0;
    double den = static_cast<double>(k) + 1.0;
    for (const Rational& a : spec.upper) num *= a.value() + k;
    for (const Rational& b : spec.lower) den *= b.value() + k;
    if (num == 0.0) return {sum, terms_used, 0.0, true};  // polynomial terminated

    term *= z * (num / den);
    sum += term;
    ++terms_used;

    const double mag = std::abs(term);
    if (!is_finite(sum))
      throw NonConvergenceError("pfq: sum left the finite range at term " +
                                std::to_string(terms_used));
    if (mag == 0.0) return {sum, terms_used, 0.0, true};
    const double ratio = mag / prev_mag;
    const double tail =
        ratio < 1.0
            ? mag * ratio / (1.0 - ratio)
            : mag * static_cast<double>(std::max(1, max_terms - terms_used));
    if (tail <= tol) return {sum, terms_used, tail, true};
    prev_mag = mag;
  }
  throw NonConvergenceError("pfq: tail above tol after " + std::to_string(max_terms) +
                            " terms");
}

}  // namespace trinomial
