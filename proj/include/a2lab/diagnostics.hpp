#pragma once

#include "a2lab/weight.hpp"

namespace a2lab {

struct A1Bracket {
  QuadScalar lo, hi;  // certified bracket for sup of Mw / w over pieces
};

struct A2Report {
  QuadScalar lattice_max;  // exact max over enumerated triadic intervals/pairs
  QuadScalar fine_cap;     // two-value bound (r+1)^2 / 4r for finer scales
  QuadScalar coarse_value; // exactly p at every integer-length interval
  int scale_floor = 0;
};

struct Diagnostics {
  A1Bracket a1;
  A2Report a2;
};

/// Muckenhoupt-style diagnostics: the pointwise Mw/w bracket from the
/// periodic maximal envelope and the lattice-restricted two-average product
/// w(J) sigma(J) / |J|^2, reported as a proxy over the enumerated scales.
Diagnostics a1_a2_diagnostics(const ConstructedWeight& cw, long window = 3);

}  // namespace a2lab
