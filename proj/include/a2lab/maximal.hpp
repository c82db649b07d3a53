#pragma once

#include "a2lab/lattice.hpp"
#include "a2lab/piecewise.hpp"

namespace a2lab {

/// Exact per-piece suprema of the Hardy-Littlewood maximal function of a
/// compactly supported nonnegative step function. Entry i is the supremum of
/// Mf over the closure of piece i, which equals the supremum over the
/// half-open piece because one-sided averages extend continuously to the
/// piece endpoints.
struct MaximalEnvelope {
  std::vector<QuadScalar> per_piece_sup;
};

MaximalEnvelope maximal_compact(const PiecewiseFn& f);

/// Exact pointwise value of Mf at a single point (candidate endpoints are the
/// breakpoints of f plus x itself). Intended for spot checks and oracles.
QuadScalar maximal_at(const PiecewiseFn& f, const Rational& x);

/// Certified per-piece bracket for the maximal function of a 1-periodic step
/// function, over the base pieces on [0, 1). `lower` is the exact supremum
/// over intervals inside the window of 2W-1 periods; `upper` additionally
/// admits the long-interval cap (W+1)/(W-1) * (period integral), which
/// dominates every interval that escapes the window.
struct PeriodicMaximal {
  std::vector<QuadScalar> lower;
  std::vector<QuadScalar> upper;
  QuadScalar cap;
  long window = 0;
};

PeriodicMaximal maximal_periodic(const PeriodicFn& f, long window_periods);

/// Exact triadic maximal function over the sublattice of triadic subintervals
/// of `root`. Breakpoints of f (and its domain ends) must lie on a triadic
/// grid; the result is piecewise constant on the finest grid cells of root.
PiecewiseFn triadic_maximal(const PiecewiseFn& f, const TriadicInterval& root);

/// Exact pointwise maximal function over unions of two adjacent equal-length
/// triadic intervals. x must not be a breakpoint of f.
QuadScalar pair_maximal_at(const PiecewiseFn& f, const Rational& x);

}  // namespace a2lab
