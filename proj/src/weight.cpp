#include "a2lab/weight.hpp"

namespace a2lab {

namespace {

long pow3_long(long e) {
  long r = 1;
  for (long i = 0; i < e; ++i) {
    if (r > (1L << 61) / 3) throw std::overflow_error("3^k overflows");
    r *= 3;
  }
  return r;
}

WeightParams finish_params(long k, std::optional<Rational> t,
                           std::optional<long> nu) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  if (k > 30) throw std::invalid_argument("k too large to represent");
  WeightParams prm;
  prm.k = k;
  prm.t = std::move(t);
  prm.epsilon = pow3(-k);
  const Rational& e = prm.epsilon;
  prm.p = (1 / (3 * e)) * ((1 + e) / 2 + 4 * e * e / (1 + e));
  prm.disc = prm.p * (prm.p - 1);
  prm.n = pow3_long(k - 1);
  prm.nu = nu.value_or(prm.n);
  if (prm.nu < 0 || prm.nu > prm.n)
    throw std::invalid_argument("depth must satisfy 0 <= nu <= 3^(k-1)");
  return prm;
}

}  // namespace

WeightParams derive_params_from_k(long k, std::optional<long> nu) {
  return finish_params(k, std::nullopt, nu);
}

WeightParams derive_params_from_t(const Rational& t, std::optional<long> nu) {
  if (t < 1) throw std::invalid_argument("scale target t must be >= 1");
  long k = 0;
  Rational p = 1;
  while (p < t) {
    ++k;
    p *= 3;
  }
  if (k < 2) k = 2;
  return finish_params(k, t, nu);
}

long piece_count_formula(long k, long nu) {
  long p = 2;
  for (long i = 0; i < nu; ++i) {
    if (p > ((1L << 62) - k - 1) / (k - 1))
      throw std::overflow_error("piece count overflows");
    p = (k + 1) + (k - 1) * p;
  }
  return p;
}

const char* region_kind_name(RegionKind k) {
  switch (k) {
    case RegionKind::Plateau: return "plateau";
    case RegionKind::Tail: return "tail";
    case RegionKind::W0Left: return "w0_left";
    case RegionKind::W0Right: return "w0_right";
  }
  return "?";
}

RegionKind region_kind_from_name(const std::string& s) {
  if (s == "plateau") return RegionKind::Plateau;
  if (s == "tail") return RegionKind::Tail;
  if (s == "w0_left") return RegionKind::W0Left;
  if (s == "w0_right") return RegionKind::W0Right;
  throw std::invalid_argument("unknown region kind: " + s);
}

namespace {

struct Builder {
  const WeightParams& prm;
  BlockResult out;

  void block(long level, const Rational& lo, const Rational& hi, long depth,
             long parent = -1) {
    const size_t node_index = out.nodes.size();
    out.nodes.push_back({lo, hi, level, depth, out.pieces.size(), 0, parent});
    if (depth == 0) {
      w0(level, lo, hi);
    } else {
      const Rational h = hi - lo;
      const Rational omega = pow2(level);
      const QuadScalar plateau(omega / prm.p);
      const QuadScalar tail_value(prm.tail_factor() * omega / prm.p);
      Rational x = lo;
      Rational len = h;  // |I_m| = 3^-m h
      for (long m = 0; m + 1 < prm.k; ++m) {
        const Rational third = len / 3;
        emit(x, x + third, plateau, {RegionKind::Plateau, level});
        block(level + 1, x + third, x + 2 * third, depth - 1,
              static_cast<long>(node_index));
        x += 2 * third;
        len = third;
      }
      // Final stage I_{k-1}: one flat piece over the first two thirds, then
      // the depressed tail piece.
      const Rational tail_lo = x + 2 * len / 3;
      emit(x, tail_lo, plateau, {RegionKind::Plateau, level});
      emit(tail_lo, hi, tail_value, {RegionKind::Tail, level});
      out.tails.push_back({tail_lo, hi, level, node_index});
    }
    out.nodes[node_index].piece_count =
        out.pieces.size() - out.nodes[node_index].first_piece;
  }

  void w0(long level, const Rational& lo, const Rational& hi) {
    const Rational omega = pow2(level);
    const Rational mid = (lo + hi) / 2;
    // omega/sqrt(p) * u^{+-1} with u = sqrt(p) + sqrt(p-1), rewritten inside
    // Q(sqrt(p(p-1))) as omega * (1 +- sqrt(disc)/p).
    const QuadScalar left = QuadScalar::make(omega, omega / prm.p, prm.disc);
    const QuadScalar right = QuadScalar::make(omega, -omega / prm.p, prm.disc);
    emit(lo, mid, left, {RegionKind::W0Left, level});
    emit(mid, hi, right, {RegionKind::W0Right, level});
  }

  void emit(const Rational& lo, const Rational& hi, QuadScalar v, RegionTag tag) {
    out.pieces.push_back({lo, hi, std::move(v)});
    out.tags.push_back(tag);
  }
};

}  // namespace

BlockResult build_block(long level, const Rational& lo, const Rational& hi,
                        long depth, const WeightParams& params) {
  if (lo >= hi) throw std::invalid_argument("empty block interval");
  if (depth < 0) throw std::invalid_argument("negative depth");
  Builder b{params, {}};
  b.block(level, lo, hi, depth);
  return std::move(b.out);
}

ConstructedWeight build_weight(const WeightParams& params) {
  BlockResult block = build_block(0, 0, 1, params.nu, params);
  PiecewiseFn w = PiecewiseFn::from_pieces(block.pieces);

  std::vector<Piece> tilde;
  tilde.reserve(block.tags.size());
  for (size_t i = 0; i < block.tags.size(); ++i) {
    const RegionTag& tag = block.tags[i];
    const bool w0 = tag.kind == RegionKind::W0Left || tag.kind == RegionKind::W0Right;
    const Rational v = pow2((w0 ? params.nu : tag.level) + 1);
    tilde.push_back({w.piece_lo(i), w.piece_hi(i), QuadScalar(v)});
  }

  return ConstructedWeight{params,
                           w,
                           PeriodicFn(w),
                           std::move(block.tags),
                           std::move(block.tails),
                           std::move(block.nodes),
                           PiecewiseFn::from_pieces(std::move(tilde)),
                           w.reciprocal()};
}

TailSets tail_sets(const ConstructedWeight& cw) {
  TailSets ts;
  const long nu = cw.params.nu;
  ts.tails_by_level.resize(nu);
  ts.halves_by_level.resize(nu);
  ts.measure.assign(nu, Rational(0));
  ts.half_measure.assign(nu, Rational(0));
  for (const TailRecord& t : cw.tails) {
    if (t.level >= nu)
      throw std::logic_error("tail level beyond construction depth");
    ts.tails_by_level[t.level].push_back(t);
    ts.measure[t.level] += t.hi - t.lo;
    const Rational quarter = (t.hi - t.lo) / 4;
    ts.halves_by_level[t.level].push_back(
        {t.lo + quarter, t.hi - quarter, t.level, t.node_index});
    ts.half_measure[t.level] += (t.hi - t.lo) / 2;
  }
  return ts;
}

Rational expected_tail_measure(const WeightParams& params, long level) {
  if (level < 0 || level >= params.nu)
    throw std::invalid_argument("tail level must satisfy 0 <= l < nu");
  Rational ratio = (1 - pow3(1 - params.k)) / 2;
  Rational m = pow3(-params.k);
  for (long i = 0; i < level; ++i) m *= ratio;
  return m;
}

EdgeAverages prefix_suffix_sup(const ConstructedWeight& cw,
                               const BuildNode& node) {
  if (node.piece_count == 0) throw std::invalid_argument("empty node");
  // Running prefix average: compare cum/tau against best as cross-products.
  QuadScalar best_cum;
  Rational best_tau;
  QuadScalar cum;
  bool first = true;
  for (size_t i = node.first_piece; i < node.first_piece + node.piece_count; ++i) {
    const Rational tau = cw.w.piece_hi(i) - node.lo;
    cum += (cw.w.piece_hi(i) - cw.w.piece_lo(i)) * cw.w.value(i);
    if (first || (cum * best_tau).cmp(best_cum * tau) > 0) {
      best_cum = cum;
      best_tau = tau;
      first = false;
    }
  }
  EdgeAverages r;
  r.prefix_sup = best_cum * Rational(1 / best_tau);

  QuadScalar scum;
  first = true;
  for (size_t j = node.first_piece + node.piece_count; j-- > node.first_piece;) {
    const Rational tau = node.hi - cw.w.piece_lo(j);
    scum += (cw.w.piece_hi(j) - cw.w.piece_lo(j)) * cw.w.value(j);
    if (first || (scum * best_tau).cmp(best_cum * tau) > 0) {
      best_cum = scum;
      best_tau = tau;
      first = false;
    }
  }
  r.suffix_sup = best_cum * Rational(1 / best_tau);
  return r;
}

}  // namespace a2lab
