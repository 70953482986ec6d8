#pragma once

// Series-free ground truth: Durand-Kerner simultaneous iteration plus
// root-multiset comparison. Every other solver in the library is validated
// against this one.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "trinomial/errors.hpp"
#include "trinomial/problem.hpp"

namespace trinomial {

struct OracleConfig {
  int max_iterations = 500;
  double tolerance = 1e-13;  // max update step for convergence
  double start_radius_factor = 1.0;
};

// Certificate bound: a root set is only returned when every residual is
// at or below this.
inline constexpr double kOracleResidualBound = 1e-10;

// All N roots of x^N - x + t by Durand-Kerner iteration. Fixed starting
// points (0.4 + 0.9i)^k and a fixed update order keep runs bit-reproducible.
inline RootSet oracle_roots(const TrinomialProblem& problem,
                            const OracleConfig& cfg = {}) {
  if (cfg.max_iterations < 1)
    throw std::invalid_argument("oracle_roots: max_iterations must be >= 1");
  if (!(cfg.tolerance > 0.0))
    throw std::invalid_argument("oracle_roots: tolerance must be positive");

  const int n = problem.degree;
  const double scale =
      cfg.start_radius_factor *
      std::max(1.0, std::pow(std::abs(problem.t), 1.0 / static_cast<double>(n)));

  std::vector<Complex> z(static_cast<std::size_t>(n));
  const Complex seed(0.4, 0.9);
  Complex power(1.0, 0.0);
  for (int k = 0; k < n; ++k) {
    z[static_cast<std::size_t>(k)] = scale * power;
    power *= seed;
  }

  const auto poly = [&](Complex x) { return pow_int(x, n) - x + problem.t; };

  bool converged = false;
  int iterations = 0;
  while (iterations < cfg.max_iterations && !converged) {
    double max_step = 0.0;
    for (int k = 0; k < n; ++k) {
      Complex denom(1.0, 0.0);
      for (int j = 0; j < n; ++j)
        if (j != k)
          denom *= z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)];
      const Complex step = poly(z[static_cast<std::size_t>(k)]) / denom;
      z[static_cast<std::size_t>(k)] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    ++iterations;
    converged = max_step < cfg.tolerance;
  }

  double worst = 0.0;
  bool finite = true;
  for (Complex root : z) {
    finite = finite && is_finite(root);
    worst = std::max(worst, std::abs(poly(root)));
  }
  if (!converged || !finite || !(worst <= kOracleResidualBound))
    throw NonConvergenceError("oracle_roots: max residual " + std::to_string(worst) +
                              " after " + std::to_string(iterations) + " iterations");

  std::vector<RootTag> tags(static_cast<std::size_t>(n),
                            RootTag{RootOrigin::oracle, -1, 1});
  RootSet out = make_root_set(problem, std::move(z), std::move(tags));
  return out;
}

struct RootPair {
  int index_a = 0;
  int index_b = 0;
  double distance = 0.0;
};

struct RootMatching {
  std::vector<RootPair> pairs;
  double max_distance = 0.0;
};

namespace detail {

inline RootMatching matching_from_permutation(const std::vector<std::vector<double>>& dist,
                                              const std::vector<int>& perm) {
  RootMatching out;
  out.pairs.reserve(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const double d = dist[i][static_cast<std::size_t>(perm[i])];
    out.pairs.push_back({static_cast<int>(i), perm[i], d});
    out.max_distance = std::max(out.max_distance, d);
  }
  return out;
}

}  // namespace detail

// Perfect matching between two equal-size root lists minimizing the largest
// pair distance: exhaustive over permutations up to n = 8, greedy beyond.
inline RootMatching match_roots(const std::vector<Complex>& a,
                                const std::vector<Complex>& b) {
  if (a.size() != b.size())
    throw SizeMismatchError("match_roots: sets of size " + std::to_string(a.size()) +
                            " and " + std::to_string(b.size()));
  const std::size_t n = a.size();
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dist[i][j] = std::abs(a[i] - b[j]);

  if (n == 0) return {};

  if (n <= 8) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best = perm;
    double best_max = std::numeric_limits<double>::infinity();
    do {
      double worst = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        worst = std::max(worst, dist[i][static_cast<std::size_t>(perm[i])]);
      if (worst < best_max) {
        best_max = worst;
        best = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return detail::matching_from_permutation(dist, best);
  }

  // Greedy bottleneck: repeatedly match the globally closest unmatched pair.
  std::vector<int> perm(n, -1);
  std::vector<bool> used_a(n, false), used_b(n, false);
  for (std::size_t round = 0; round < n; ++round) {
    double smallest = std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (used_a[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (used_b[j]) continue;
        if (dist[i][j] < smallest) {
          smallest = dist[i][j];
          bi = i;
          bj = j;
        }
      }
    }
    perm[bi] = static_cast<int>(bj);
    used_a[bi] = true;
    used_b[bj] = true;
  }
  return detail::matching_from_permutation(dist, perm);
}

inline RootMatching match_roots(const RootSet& a, const RootSet& b) {
  return match_roots(a.roots, b.roots);
}

}  // namespace trinomial
