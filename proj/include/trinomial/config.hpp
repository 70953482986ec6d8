#pragma once

namespace trinomial {

// Knobs shared by every series and iteration in the library.
struct SolverConfig {
  double tol = 1e-12;           // series tail target
  double residual_tol = 1e-9;   // accepted |x^N - x + t| for a returned root
  int max_terms = 100000;       // series term cap
  double radius_margin = 0.02;  // refuse |t| within this fraction of the radius
};

}  // namespace trinomial
