#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trinomial/types.hpp"

namespace trinomial {

// The reduced trinomial x^N - x + t = 0.
struct TrinomialProblem {
  int degree;
  Complex t;

  TrinomialProblem(int degree_, Complex t_) : degree(degree_), t(t_) {
    if (degree < 2)
      throw std::invalid_argument("TrinomialProblem: degree must be >= 2");
  }
};

enum class RootOrigin { series_branch, sum_rule, closed_form, oracle };

struct RootTag {
  RootOrigin origin = RootOrigin::oracle;
  int branch = -1;       // branch index when origin == series_branch
  int multiplicity = 1;  // > 1 when clustered with other roots

  std::string str() const {
    switch (origin) {
      case RootOrigin::series_branch:
        return "series-branch " + std::to_string(branch);
      case RootOrigin::sum_rule:
        return "sum-rule";
      case RootOrigin::closed_form:
        return "closed-form";
      case RootOrigin::oracle:
        return "oracle";
    }
    return "unknown";
  }
};

// All N roots of one problem, with per-root residuals and provenance.
// Reciprocal-transform sets measure residuals against the reciprocal
// equation instead; see reciprocal_roots.
struct RootSet {
  int degree = 0;
  Complex t{};
  std::vector<Complex> roots;
  std::vector<double> residuals;
  std::vector<RootTag> provenance;
};

// |x^N - x + t|
inline double residual(const TrinomialProblem& problem, Complex x) {
  return std::abs(pow_int(x, problem.degree) - x + problem.t);
}

// Vieta: the root sum equals the negated x^{N-1} coefficient, which is 1 for
// N = 2 and 0 for N >= 3.
inline double vieta_sum_target(int degree) { return degree == 2 ? 1.0 : 0.0; }

inline RootSet make_root_set(const TrinomialProblem& problem,
                             std::vector<Complex> roots,
                             std::vector<RootTag> tags) {
  RootSet out;
  out.degree = problem.degree;
  out.t = problem.t;
  out.roots = std::move(roots);
  out.provenance = std::move(tags);
  out.residuals.reserve(out.roots.size());
  for (Complex x : out.roots) out.residuals.push_back(residual(problem, x));
  return out;
}

// Roots closer than cluster_tol to each other get a multiplicity count; no
// deflation is attempted.
inline void annotate_multiplicity(RootSet& set, double cluster_tol = 1e-7) {
  const std::size_t n = set.roots.size();
  for (std::size_t i = 0; i < n; ++i) {
    int count = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(set.roots[i] - set.roots[j]) < cluster_tol) ++count;
    set.provenance[i].multiplicity = count;
  }
}

}  // namespace trinomial
