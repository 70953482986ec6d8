#pragma once

// Direct summation of the inversion series for x^N - x + t = 0: one root per
// (N-1)-st root of unity, the last root from the Vieta sum rule, and the
// convergence radius in |t|.

#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "trinomial/config.hpp"
#include "trinomial/errors.hpp"
#include "trinomial/oracle.hpp"
#include "trinomial/problem.hpp"
#include "trinomial/special_functions.hpp"

namespace trinomial {

// Selects omega_j = exp(2 pi i (j+1)/(N-1)) among the (N-1)-st roots of
// unity; j = 0 is the branch whose leading term is exp(-2 pi i/(N-1)).
struct BranchIndex {
  int j = 0;
};

// Radius of convergence in |t| of the inversion series, (N-1) N^{-N/(N-1)},
// from the ratio test on the series coefficients.
inline double convergence_radius(int degree) {
  if (degree < 2)
    throw std::invalid_argument("convergence_radius: degree must be >= 2");
  const double n = static_cast<double>(degree);
  return (n - 1.0) * std::pow(n, -n / (n - 1.0));
}

inline Complex branch_root_of_unity(int degree, BranchIndex branch) {
  if (degree < 2)
    throw std::invalid_argument("branch_root_of_unity: degree must be >= 2");
  if (branch.j < 0 || branch.j > degree - 2)
    throw std::invalid_argument("branch index " + std::to_string(branch.j) +
                                " out of range [0, " + std::to_string(degree - 2) + "]");
  return root_of_unity(branch.j + 1, degree - 1);
}

namespace detail {

inline void check_radius(const TrinomialProblem& problem, const SolverConfig& cfg) {
  const double radius = convergence_radius(problem.degree);
  const double limit = radius * (1.0 - cfg.radius_margin);
  if (!(std::abs(problem.t) < limit))
    throw OutsideRadiusError("|t| = " + std::to_string(std::abs(problem.t)) +
                             " not below " + std::to_string(limit) +
                             " (radius " + std::to_string(radius) + ", margin " +
                             std::to_string(cfg.radius_margin) + ")");
}

// One-time cross-check of the sum-rule constant against the oracle.
inline void vieta_self_check() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    for (int degree : {2, 3}) {
      const TrinomialProblem probe(degree, Complex(0.125, 0.0));
      const RootSet set = oracle_roots(probe);
      Complex sum{};
      for (Complex x : set.roots) sum += x;
      if (std::abs(sum - vieta_sum_target(degree)) > 1e-9)
        throw std::logic_error("vieta_self_check: sum-rule constant mismatch");
    }
  });
}

}  // namespace detail

// One branch root:
//   x_j = omega_j^{-1} - t/(N-1) * sum_n (t omega_j)^n * gamma_ratio(N, n).
// Terms are assembled in log space so the coefficient growth cannot
// overflow; summation stops when the geometric tail bound is below cfg.tol.
inline SeriesResult series_root(const TrinomialProblem& problem, BranchIndex branch,
                                const SolverConfig& cfg = {}) {
  detail::check_radius(problem, cfg);
  const int degree = problem.degree;
  const Complex leading = root_of_unity(-(branch.j + 1), degree - 1);
  const Complex omega = branch_root_of_unity(degree, branch);

  if (problem.t == Complex{}) return {leading, 1, 0.0, true};

  const Complex tw = problem.t * omega;
  const double log_mag = std::log(std::abs(tw));
  const double phase = std::arg(tw);
  const Complex prefactor = -problem.t / static_cast<double>(degree - 1);
  const double prescale = std::abs(prefactor);

  Complex series_sum{};
  double prev_mag = 0.0;
  double tail = std::numeric_limits<double>::infinity();
  int terms = 0;
  bool converged = false;

  for (int n = 0; n < cfg.max_terms; ++n) {
    const double term_log = n * log_mag + gamma_ratio_log(degree, n);
    series_sum += std::polar(std::exp(term_log), n * phase);
    ++terms;

    const double mag = std::exp(term_log) * prescale;  // term size in root units
    if (n >= 1) {
      const double ratio = prev_mag > 0.0 ? mag / prev_mag : 0.0;
      tail = ratio < 1.0
                 ? mag * ratio / (1.0 - ratio)
                 : mag * static_cast<double>(std::max(1, cfg.max_terms - terms));
      if (tail <= cfg.tol) {
        converged = true;
        break;
      }
    }
    prev_mag = mag;
  }
  if (!converged)
    throw NonConvergenceError("series_root: tail " + std::to_string(tail) +
                              " above tol after " + std::to_string(terms) + " terms");

  const Complex value = leading + prefactor * series_sum;
  const double res = residual(problem, value);
  if (!(res <= cfg.residual_tol))
    throw ResidualError("series_root: residual " + std::to_string(res) +
                        " above residual_tol");
  return {value, terms, tail, true};
}

// All roots: N-1 series branches plus the sum-rule completion
// x_N = delta_{N,2} - sum of the others.
inline RootSet all_roots_series(const TrinomialProblem& problem,
                                const SolverConfig& cfg = {}) {
  detail::vieta_self_check();
  const int degree = problem.degree;
  std::vector<Complex> roots;
  std::vector<RootTag> tags;
  roots.reserve(static_cast<std::size_t>(degree));
  tags.reserve(static_cast<std::size_t>(degree));

  Complex sum{};
  for (int j = 0; j <= degree - 2; ++j) {
    const SeriesResult branch = series_root(problem, BranchIndex{j}, cfg);
    roots.push_back(branch.value);
    tags.push_back({RootOrigin::series_branch, j, 1});
    sum += branch.value;
  }
  roots.push_back(Complex(vieta_sum_target(degree), 0.0) - sum);
  tags.push_back({RootOrigin::sum_rule, -1, 1});

  RootSet out = make_root_set(problem, std::move(roots), std::move(tags));
  if (!(out.residuals.back() <= cfg.residual_tol))
    throw ResidualError("all_roots_series: sum-rule root residual " +
                        std::to_string(out.residuals.back()) +
                        " above residual_tol (branch mis-summation)");
  return out;
}

}  // namespace trinomial
