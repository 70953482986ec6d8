#pragma once

// Splits the inversion series into its N-1 residue classes mod (N-1). The
// Gauss multiplication theorem turns each class into one pFq whose parameter
// lists are generated here (never transcribed), with exact rational
// cancellation of parameters shared by both lists.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trinomial/config.hpp"
#include "trinomial/errors.hpp"
#include "trinomial/lagrange_series.hpp"
#include "trinomial/special_functions.hpp"

namespace trinomial {

// Parameter lists of one residue class q: the series subsequence
// n = q + m(N-1) sums to coefficient * pFq(upper; lower; Z) with
// Z = (t omega/(N-1))^{N-1} N^N.
struct ClassParameters {
  int residue = 0;
  std::vector<Rational> upper;
  std::vector<Rational> lower;
};

namespace detail {

// Multiset cancellation: a parameter present in both lists drops from both.
inline void cancel_parameters(std::vector<Rational>& upper, std::vector<Rational>& lower) {
  std::sort(upper.begin(), upper.end());
  std::sort(lower.begin(), lower.end());
  std::vector<Rational> kept_upper, kept_lower;
  std::size_t i = 0, j = 0;
  while (i < upper.size() && j < lower.size()) {
    if (upper[i] == lower[j]) {
      ++i;
      ++j;
    } else if (upper[i] < lower[j]) {
      kept_upper.push_back(upper[i++]);
    } else {
      kept_lower.push_back(lower[j++]);
    }
  }
  kept_upper.insert(kept_upper.end(), upper.begin() + static_cast<std::ptrdiff_t>(i), upper.end());
  kept_lower.insert(kept_lower.end(), lower.begin() + static_cast<std::ptrdiff_t>(j), lower.end());
  upper = std::move(kept_upper);
  lower = std::move(kept_lower);
}

}  // namespace detail

// Expand Gamma(Nn/(N-1)+1), Gamma(n+2), Gamma(n/(N-1)+1) at n = q + m(N-1)
// with the multiplication theorem at multipliers N and N-1:
//   upper = {(qN/(N-1) + 1 + k)/N : k = 0..N-1} + {1}
//   lower = {(q + k + 2)/(N-1)    : k = 0..N-2} + {q/(N-1) + 1}
// then cancel exact duplicates across the lists.
inline ClassParameters class_parameters(int degree, int residue) {
  if (degree < 2)
    throw std::invalid_argument("class_parameters: degree must be >= 2");
  if (residue < 0 || residue > degree - 2)
    throw std::invalid_argument("class_parameters: residue out of range");

  const std::int64_t n = degree;
  const std::int64_t m = degree - 1;
  const std::int64_t q = residue;

  std::vector<Rational> upper;
  std::vector<Rational> lower;
  upper.reserve(static_cast<std::size_t>(n + 1));
  lower.reserve(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) upper.emplace_back(q * n + (k + 1) * m, n * m);
  upper.emplace_back(1);
  for (std::int64_t k = 0; k + 1 < n; ++k) lower.emplace_back(q + k + 2, m);
  lower.emplace_back(q + m, m);

  detail::cancel_parameters(upper, lower);
  return {residue, std::move(upper), std::move(lower)};
}

// Z = c * t^{N-1} with c = N^N/(N-1)^{N-1} as an exact rational (the branch
// factor omega^{N-1} is always 1). int64 limits this to degree <= 15.
inline Rational argument_scale(int degree) {
  if (degree < 2 || degree > 15)
    throw std::invalid_argument("argument_scale: degree must be in [2, 15]");
  std::int64_t num = 1, den = 1;
  for (int k = 0; k < degree; ++k) num *= degree;
  for (int k = 0; k + 1 < degree; ++k) den *= degree - 1;
  return {num, den};
}

struct DecomposedClass {
  Complex coefficient;
  HypergeometricSpec spec;
};

struct DecomposedRoot {
  int degree = 0;
  Complex t{};
  int branch = 0;
  Complex leading{};
  std::vector<DecomposedClass> classes;  // ascending residue class q
};

// The branch root as leading + sum_q coefficient_q * pFq_q(Z). Coefficients
// are the exact n = q-th series term (the pFq's m = 0 value is 1), so no
// printed prefactor is involved.
inline DecomposedRoot decompose(const TrinomialProblem& problem, BranchIndex branch) {
  const int degree = problem.degree;
  const Complex omega = branch_root_of_unity(degree, branch);
  const Complex leading = root_of_unity(-(branch.j + 1), degree - 1);
  const Complex argument = pow_int(problem.t * omega / static_cast<double>(degree - 1),
                                   degree - 1) *
                           std::pow(static_cast<double>(degree), degree);
  const Complex tw = problem.t * omega;
  const Complex prefactor = -problem.t / static_cast<double>(degree - 1);

  DecomposedRoot out;
  out.degree = degree;
  out.t = problem.t;
  out.branch = branch.j;
  out.leading = leading;
  out.classes.reserve(static_cast<std::size_t>(degree - 1));
  for (int q = 0; q <= degree - 2; ++q) {
    ClassParameters params = class_parameters(degree, q);
    const Complex coefficient = prefactor * pow_int(tw, q) * gamma_ratio_term(degree, q);
    out.classes.push_back({coefficient, HypergeometricSpec(std::move(params.upper),
                                                           std::move(params.lower),
                                                           argument)});
  }
  return out;
}

// leading + sum of the class values, combined in ascending q so results are
// reproducible. pFq failures are rethrown annotated with the class index.
inline SeriesResult evaluate_decomposition(const DecomposedRoot& decomposed,
                                           const SolverConfig& cfg = {}) {
  Complex value = decomposed.leading;
  int terms = 0;
  double tail = 0.0;
  for (std::size_t q = 0; q < decomposed.classes.size(); ++q) {
    const DecomposedClass& cls = decomposed.classes[q];
    try {
      const SeriesResult part = pfq(cls.spec, cfg.tol, cfg.max_terms);
      value += cls.coefficient * part.value;
      terms += part.terms_used;
      tail += std::abs(cls.coefficient) * part.tail_estimate;
    } catch (const DivergenceError& e) {
      throw DivergenceError("class q=" + std::to_string(q) + ": " + e.what());
    } catch (const NonConvergenceError& e) {
      throw NonConvergenceError("class q=" + std::to_string(q) + ": " + e.what());
    }
  }

  const TrinomialProblem problem(decomposed.degree, decomposed.t);
  const double res = residual(problem, value);
  if (!(res <= cfg.residual_tol))
    throw ResidualError("evaluate_decomposition: residual " + std::to_string(res) +
                        " above residual_tol");
  return {value, terms, tail, true};
}

namespace detail {

// sum_m t^{2m} gamma_ratio(3, 2m + parity), assembled in log space.
inline SeriesResult cubic_parity_sum(Complex t, int parity, double coeff_scale,
                                     const SolverConfig& cfg) {
  if (t == Complex{}) return {Complex(1.0, 0.0), 1, 0.0, true};
  const double log_mag = std::log(std::abs(t));
  const double phase = std::arg(t);

  Complex sum{};
  double prev_mag = 0.0;
  double tail = std::numeric_limits<double>::infinity();
  int terms = 0;
  for (int m = 0; m < cfg.max_terms; ++m) {
    const double term_log = 2.0 * m * log_mag + gamma_ratio_log(3, 2 * m + parity);
    sum += std::polar(std::exp(term_log), 2.0 * m * phase);
    ++terms;

    const double mag = std::exp(term_log) * coeff_scale;
    if (m >= 1) {
      const double ratio = prev_mag > 0.0 ? mag / prev_mag : 0.0;
      tail = ratio < 1.0
                 ? mag * ratio / (1.0 - ratio)
                 : mag * static_cast<double>(std::max(1, cfg.max_terms - terms));
      if (tail <= cfg.tol) return {sum, terms, tail, true};
    }
    prev_mag = mag;
  }
  throw NonConvergenceError("cubic_parity_sum: tail above tol after " +
                            std::to_string(terms) + " terms");
}

}  // namespace detail

// Even/odd split of the cubic branch series (omega = -1):
//   x = -1 - (t/2) sum_even + (t^2/2) sum_odd.
// Returns the two parts with their coefficients applied, so
// first + second - 1 is the branch root.
inline std::pair<SeriesResult, SeriesResult> parity_split_cubic(Complex t,
                                                                const SolverConfig& cfg = {}) {
  if (!(std::abs(t) < convergence_radius(3)))
    throw OutsideRadiusError("parity_split_cubic: |t| = " + std::to_string(std::abs(t)) +
                             " not below 2/sqrt(27)");
  const Complex even_coeff = -t / 2.0;
  const Complex odd_coeff = t * t / 2.0;

  // The parity sums report tails already scaled to root units.
  SeriesResult even = detail::cubic_parity_sum(t, 0, std::abs(even_coeff), cfg);
  SeriesResult odd = detail::cubic_parity_sum(t, 1, std::abs(odd_coeff), cfg);
  even.value *= even_coeff;
  odd.value *= odd_coeff;
  return {even, odd};
}

}  // namespace trinomial
