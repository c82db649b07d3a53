#pragma once

#include <vector>

#include "a2lab/weight.hpp"

namespace a2lab {

/// Grid-based iteration report. Illustrative only: every quantity is a
/// Riemann approximation on the sample grid, not a certified bound.
struct RubioReport {
  size_t grid_size = 0;
  int iterations = 0;
  double m_norm = 0;       // the operator-norm surrogate used in the weights
  bool domination_ok = false;  // g <= R g on the grid
  double g_norm = 0;       // grid L2(sigma) norm of g
  double r_norm = 0;       // grid L2(sigma) norm of R g
  bool norm_ok = false;    // r_norm <= 2 g_norm
  double max_ratio = 0;    // max over grid of M(R g) / R g
  double truncation_slack = 0;
  bool ratio_ok = false;   // max_ratio <= 2 m_norm + slack
};

/// Truncated majorization series R g = sum_{i<=K} M^i g / (2 m)^i on an
/// equispaced breakpoint-avoiding grid over one period, with the grid
/// maximal operator (contiguous window means).
RubioReport rubio_demo(const std::vector<double>& g, const ConstructedWeight& cw,
                       int iterations, double m_norm);

/// Default grid for the demo: x_i = (2i+1)/(2n), never a construction
/// breakpoint (denominators are powers of two vs 2 * 3^m).
std::vector<Rational> rubio_grid(size_t n);

}  // namespace a2lab
