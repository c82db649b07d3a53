#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "a2lab/rational.hpp"

namespace a2lab {

/// Triadic interval [3^scale * pos, 3^scale * (pos + 1)).
struct TriadicInterval {
  int scale = 0;
  std::int64_t pos = 0;

  Rational lo() const { return pow3(scale) * rat(pos); }
  Rational hi() const { return pow3(scale) * rat(pos + 1); }
  Rational length() const { return pow3(scale); }

  TriadicInterval parent() const {
    std::int64_t p = pos >= 0 ? pos / 3 : -((-pos + 2) / 3);
    return {scale + 1, p};
  }
  std::array<TriadicInterval, 3> children() const {
    return {TriadicInterval{scale - 1, 3 * pos},
            TriadicInterval{scale - 1, 3 * pos + 1},
            TriadicInterval{scale - 1, 3 * pos + 2}};
  }
  bool contains(const TriadicInterval& o) const;
  bool operator==(const TriadicInterval& o) const = default;
};

/// Union of two adjacent equal-length triadic intervals:
/// [3^scale * pos, 3^scale * (pos + 2)).
struct JPair {
  int scale = 0;
  std::int64_t pos = 0;

  Rational lo() const { return pow3(scale) * rat(pos); }
  Rational hi() const { return pow3(scale) * rat(pos + 2); }
  Rational length() const { return 2 * pow3(scale); }

  TriadicInterval left_half() const { return {scale, pos}; }
  TriadicInterval right_half() const { return {scale, pos + 1}; }
  bool operator==(const JPair& o) const = default;
};

/// Smallest-recipe cover: the pair J with I subseteq J and |J| <= 6 |I|,
/// picked by the fixed rule scale = the unique j with 3^(j-1) <= |I| < 3^j
/// and pos = floor(inf I / 3^j). Requires a nondegenerate bounded interval.
JPair cover_with_j(const Rational& lo, const Rational& hi);

/// Splits the pair family into the two disjoint triadic lattices: 1 for even
/// position, 2 for odd. Each class tiles the line at every scale and is closed
/// under trisection (children sit at positions 3n, 3n+2, 3n+4).
int classify_j(const JPair& j);

/// The three equal pairs one scale down that partition j.
std::array<JPair, 3> j_trisect(const JPair& j);

/// Every pair at the given scale whose interior meets [window_lo, window_hi),
/// in increasing position order, each exactly once.
std::vector<JPair> enumerate_j(int scale, const Rational& window_lo,
                               const Rational& window_hi);

}  // namespace a2lab
