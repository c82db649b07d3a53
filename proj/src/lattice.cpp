#include "a2lab/lattice.hpp"

namespace a2lab {

bool TriadicInterval::contains(const TriadicInterval& o) const {
  if (o.scale > scale) return false;
  TriadicInterval t = o;
  while (t.scale < scale) t = t.parent();
  return t.pos == pos;
}

JPair cover_with_j(const Rational& lo, const Rational& hi) {
  if (lo >= hi) throw std::invalid_argument("degenerate interval");
  const Rational len = hi - lo;
  // Unique j with 3^(j-1) <= len < 3^j.
  int j = 1;
  Rational p = 1;  // 3^(j-1)
  while (p > len) {
    --j;
    p /= 3;
  }
  while (p * 3 <= len) {
    ++j;
    p *= 3;
  }
  const Rational scale_len = p * 3;  // 3^j
  const BigInt n = floor_rat(lo / scale_len);
  if (!n.fits_slong_p()) throw std::overflow_error("cover position overflow");
  return {j, n.get_si()};
}

int classify_j(const JPair& j) { return (j.pos % 2 + 2) % 2 == 0 ? 1 : 2; }

std::array<JPair, 3> j_trisect(const JPair& j) {
  return {JPair{j.scale - 1, 3 * j.pos},
          JPair{j.scale - 1, 3 * j.pos + 2},
          JPair{j.scale - 1, 3 * j.pos + 4}};
}

std::vector<JPair> enumerate_j(int scale, const Rational& window_lo,
                               const Rational& window_hi) {
  std::vector<JPair> out;
  if (window_lo >= window_hi) return out;
  const Rational unit = pow3(scale);
  // pos with pos * 3^scale < hi and (pos + 2) * 3^scale > lo.
  BigInt first = floor_rat(window_lo / unit) - 1;
  if (Rational(first + 1) * unit > window_lo) --first;  // guard exact edges
  while (Rational(first + 2) * unit <= window_lo) ++first;
  for (BigInt n = first;; ++n) {
    if (Rational(n) * unit >= window_hi) break;
    if (Rational(n + 2) * unit <= window_lo) continue;
    if (!n.fits_slong_p()) throw std::overflow_error("pair position overflow");
    out.push_back({scale, n.get_si()});
  }
  return out;
}

}  // namespace a2lab
