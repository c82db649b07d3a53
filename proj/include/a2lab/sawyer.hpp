#pragma once

#include "a2lab/lattice.hpp"
#include "a2lab/piecewise.hpp"

namespace a2lab {

/// One stopping interval: maximal triadic interval where the average of f
/// exceeds the generation threshold a^gen.
struct StoppingInterval {
  TriadicInterval iv;
  long gen = 0;
  QuadScalar avg_f;                         // exact average of f over iv
  std::vector<std::pair<Rational, Rational>> kept;  // iv minus the next generation
  QuadScalar sigma_kept;                    // sigma mass of `kept`
  QuadScalar alpha;                         // (w(iv)/|iv|)^2 sigma_kept
  QuadScalar packing_lhs;                   // sum of alpha over stopping intervals inside iv
  QuadScalar packing_rhs;                   // integral over iv of (M(w chi_iv))^2 sigma
};

struct SawyerReport {
  long gen_lo = 0, gen_hi = 0;
  std::vector<StoppingInterval> stopping;  // all generations, outer order
  QuadScalar maximal_norm_sq;              // ||M f||^2 in L2(sigma), exact
  QuadScalar chain_rhs;                    // a^2 sum avg^2 sigma(kept)
  bool packing_ok = false;                 // lhs <= rhs for every stopping interval
  bool chain_ok = false;                   // maximal_norm_sq <= chain_rhs
  bool disjoint_ok = false;                // fixed-generation intervals disjoint, nested down
};

/// Stopping-time verifier for the triadic maximal operator on the lattice of
/// triadic subintervals of the common domain (which must itself be a triadic
/// interval). Builds the level sets {M f > a^gen} as maximal triadic
/// intervals and checks the packing and level-set-chain inequalities exactly.
/// Requires f >= 0 and w > 0 on a common triadic grid.
SawyerReport sawyer_verify(const PiecewiseFn& f, const PiecewiseFn& w,
                           const Rational& a);

/// Seeded random instance on a common triadic grid: f nonnegative with some
/// zero cells, w strictly positive.
std::pair<PiecewiseFn, PiecewiseFn> random_triadic_pair(std::uint64_t seed);

}  // namespace a2lab
