#pragma once

// Explicit roots: quadratic via the 2F1(1/2,1;2;4t) closed form, cubic trig
// forms with analytic continuation of asin past t = 2/sqrt(27), the quintic
// 4F3 small-root branch, and the reciprocal-trinomial transform
// y^N - a y^{N-1} + a = 0 with y = 1/x, a = 1/t.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trinomial/config.hpp"
#include "trinomial/errors.hpp"
#include "trinomial/lagrange_series.hpp"
#include "trinomial/oracle.hpp"
#include "trinomial/problem.hpp"
#include "trinomial/special_functions.hpp"

namespace trinomial {

// 2F1(1/2, 1; 2; z) in closed form. Inside the unit disk the stable
// equivalent 2/(1 + sqrt(1-z)) of (2/z)(1 - sqrt(1-z)) is used; outside,
// the (2/z)(1 - i sqrt(z-1)) branch.
inline Complex gauss_2f1_half_one_two(Complex z) {
  if (std::abs(z) <= 1.0) return 2.0 / (1.0 + std::sqrt(1.0 - z));
  return (1.0 - Complex(0.0, 1.0) * std::sqrt(z - 1.0)) * 2.0 / z;
}

// Both roots of x^2 - x + t: x1 = 1 - t 2F1(1/2,1;2;4t), x2 = 1 - x1.
inline RootSet quadratic_roots(Complex t) {
  const TrinomialProblem problem(2, t);
  const Complex x1 = 1.0 - t * gauss_2f1_half_one_two(4.0 * t);
  const Complex x2 = 1.0 - x1;
  RootSet out = make_root_set(problem, {x1, x2},
                              {{RootOrigin::closed_form, -1, 1},
                               {RootOrigin::closed_form, -1, 1}});
  annotate_multiplicity(out);
  for (double r : out.residuals)
    if (!(r <= 1e-12))
      throw ResidualError("quadratic_roots: residual " + std::to_string(r));
  return out;
}

struct CubicTrigState {
  Complex theta{};
  bool continued = false;
};

// theta = asin(t sqrt(27)/2). Real asin while the argument stays real in
// [-1, 1]; otherwise the log form asin z = pi/2 - i Ln(z + sqrt(z^2 - 1)).
inline CubicTrigState cubic_theta(Complex t) {
  const Complex z = t * (std::sqrt(27.0) / 2.0);
  if (t.imag() == 0.0 && std::abs(z.real()) <= 1.0)
    return {Complex(std::asin(z.real()), 0.0), false};
  const Complex log_arg = z + std::sqrt(z * z - 1.0);
  return {std::numbers::pi / 2.0 - Complex(0.0, 1.0) * std::log(log_arg), true};
}

namespace detail {

inline std::vector<Complex> cubic_triple(Complex theta) {
  const Complex u = theta / 3.0;
  const Complex s = std::sin(u);
  const Complex c = std::cos(u);
  const double inv_sqrt3 = 1.0 / std::numbers::sqrt3;
  return {-inv_sqrt3 * s - c, -inv_sqrt3 * s + c, 2.0 * inv_sqrt3 * s};
}

}  // namespace detail

// The three trig-form roots
//   x1 = -sin(theta/3)/sqrt(3) - cos(theta/3)
//   x2 = -sin(theta/3)/sqrt(3) + cos(theta/3)
//   x3 =  2 sin(theta/3)/sqrt(3)
// with theta = asin(t sqrt(27)/2). If the residual check fails on the
// continued branch, the conjugate branch is tried before giving up.
inline RootSet cubic_roots(Complex t) {
  const TrinomialProblem problem(3, t);
  const CubicTrigState state = cubic_theta(t);

  std::vector<Complex> roots = detail::cubic_triple(state.theta);
  const auto worst = [&](const std::vector<Complex>& candidate) {
    double w = 0.0;
    for (Complex x : candidate) w = std::max(w, residual(problem, x));
    return w;
  };
  if (!(worst(roots) <= 1e-10) && state.continued) {
    std::vector<Complex> alternate = detail::cubic_triple(std::conj(state.theta));
    if (worst(alternate) < worst(roots)) roots = std::move(alternate);
  }

  RootSet out = make_root_set(problem, std::move(roots),
                              {{RootOrigin::closed_form, -1, 1},
                               {RootOrigin::closed_form, -1, 1},
                               {RootOrigin::closed_form, -1, 1}});
  annotate_multiplicity(out);
  for (double r : out.residuals)
    if (!(r <= 1e-10))
      throw ResidualError("cubic_roots: residual " + std::to_string(r));
  return out;
}

// The root of x^5 - x + t that tends to t as t -> 0:
//   x = t 4F3(1/5,2/5,3/5,4/5; 1/2,3/4,5/4; 3125 t^4/256).
inline SeriesResult quintic_small_root(Complex t, const SolverConfig& cfg = {}) {
  const Complex argument = pow_int(t, 4) * (3125.0 / 256.0);
  if (!(std::abs(argument) < 1.0))
    throw OutsideRadiusError("quintic_small_root: |3125 t^4/256| = " +
                             std::to_string(std::abs(argument)) + " not below 1");

  const HypergeometricSpec spec({{1, 5}, {2, 5}, {3, 5}, {4, 5}},
                                {{1, 2}, {3, 4}, {5, 4}}, argument);
  const SeriesResult series = pfq(spec, cfg.tol, cfg.max_terms);
  const Complex x = t * series.value;

  const double res = residual(TrinomialProblem(5, t), x);
  if (!(res <= cfg.residual_tol))
    throw ResidualError("quintic_small_root: residual " + std::to_string(res));
  return {x, series.terms_used, std::abs(t) * series.tail_estimate, series.converged};
}

// Roots of y^N - a y^{N-1} + a = 0 as reciprocals of the roots of
// x^N - x + 1/a = 0, solved by the best available backend (closed form for
// N = 2, 3, series inside the radius, oracle otherwise). Residuals are
// measured against the reciprocal equation.
inline RootSet reciprocal_roots(int degree, Complex a, const SolverConfig& cfg = {}) {
  if (a == Complex{})
    throw std::invalid_argument("reciprocal_roots: a must be nonzero");
  const Complex t = 1.0 / a;
  const TrinomialProblem problem(degree, t);

  RootSet base;
  if (degree == 2) {
    base = quadratic_roots(t);
  } else if (degree == 3) {
    base = cubic_roots(t);
  } else if (std::abs(t) < convergence_radius(degree) * (1.0 - cfg.radius_margin)) {
    base = all_roots_series(problem, cfg);
  } else {
    base = oracle_roots(problem);
  }

  RootSet out;
  out.degree = degree;
  out.t = t;
  out.provenance = base.provenance;
  out.roots.reserve(base.roots.size());
  out.residuals.reserve(base.roots.size());

  const double bound = 1e-8 * std::max(1.0, std::pow(std::abs(a), degree));
  for (Complex x : base.roots) {
    if (std::abs(x) < 1e-300)
      throw ZeroRootError("reciprocal_roots: root at the origin maps to infinity");
    const Complex y = 1.0 / x;
    const double res =
        std::abs(pow_int(y, degree) - a * pow_int(y, degree - 1) + a);
    if (!(res <= bound))
      throw ResidualError("reciprocal_roots: residual " + std::to_string(res) +
                          " above " + std::to_string(bound));
    out.roots.push_back(y);
    out.residuals.push_back(res);
  }
  annotate_multiplicity(out);
  return out;
}

}  // namespace trinomial
