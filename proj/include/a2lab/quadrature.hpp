#pragma once

#include "a2lab/weight.hpp"

namespace a2lab {

struct QuadratureResult {
  double value = 0;        // the L2(sigma) norm itself
  double value_sq = 0;     // the underlying integral
  double error_bound = 0;  // dominates the refinement-doubling discrepancy
  long node_count = 0;
};

/// || H(w chi_[0,1)) ||_{L2(sigma)} by per-piece quadrature with geometric
/// node refinement toward every breakpoint (the integrand carries integrable
/// squared-log singularities there). Transform values come from a treecode
/// over the collapsed log-kernel coefficients; near-field distances are
/// formed in piece-local coordinates so deep construction scales keep full
/// relative accuracy.
QuadratureResult hilbert_l2sigma(const ConstructedWeight& cw, double rel_tol,
                                 int threads = 1);

/// Same machinery for an arbitrary positive step function on [0, 1).
QuadratureResult hilbert_l2sigma_of(const PiecewiseFn& w, double rel_tol,
                                    int threads = 1);

}  // namespace a2lab
