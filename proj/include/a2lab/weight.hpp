#pragma once

#include <optional>
#include <string>
#include <vector>

#include "a2lab/piecewise.hpp"

namespace a2lab {

/// Parameters of one construction context. For scale target t >= 1 the order
/// k is the smallest one with 3^k >= t (at least 2); eps = 3^-k; p is fixed by
/// the unit-average identity of the recursion; disc = p(p-1) generates the
/// quadratic field all values live in; n = 3^(k-1) is the full recursion
/// depth; nu <= n is the depth actually built.
struct WeightParams {
  long k = 0;
  std::optional<Rational> t;
  Rational epsilon;
  Rational p;
  Rational disc;
  long n = 0;
  long nu = 0;

  Rational tail_factor() const {  // 4 eps / (1 + eps)
    return 4 * epsilon / (1 + epsilon);
  }
};

WeightParams derive_params_from_k(long k, std::optional<long> nu = std::nullopt);
WeightParams derive_params_from_t(const Rational& t,
                                  std::optional<long> nu = std::nullopt);

/// Raw pieces: P(0) = 2, P(nu) = (k+1) + (k-1) P(nu-1).
long piece_count_formula(long k, long nu);

enum class RegionKind { Plateau, Tail, W0Left, W0Right };

const char* region_kind_name(RegionKind k);
RegionKind region_kind_from_name(const std::string& s);

/// Which block emitted a raw piece: the block's 2^level factor plus the piece
/// role inside it. W0 pieces always sit at level == nu.
struct RegionTag {
  RegionKind kind = RegionKind::Plateau;
  long level = 0;
};

struct TailRecord {
  Rational lo, hi;
  long level = 0;
  size_t node_index = 0;  // the block that emitted this tail
};

/// One block of the recursion: the weight restricted to [lo, hi) equals the
/// depth-`depth` block with factor 2^level. Pieces of the block occupy the
/// contiguous slice [first_piece, first_piece + piece_count) of the raw array.
struct BuildNode {
  Rational lo, hi;
  long level = 0;
  long depth = 0;
  size_t first_piece = 0;
  size_t piece_count = 0;
  long parent = -1;  // index into the node array; -1 at the root
};

struct BlockResult {
  std::vector<Piece> pieces;
  std::vector<RegionTag> tags;
  std::vector<TailRecord> tails;
  std::vector<BuildNode> nodes;  // pre-order
};

/// The recursive block on [lo, hi) with factor 2^level and remaining depth.
BlockResult build_block(long level, const Rational& lo, const Rational& hi,
                        long depth, const WeightParams& params);

struct ConstructedWeight {
  WeightParams params;
  PiecewiseFn w;          // raw segmentation on [0,1)
  PeriodicFn periodic;    // 1-periodization
  std::vector<RegionTag> tags;
  std::vector<TailRecord> tails;
  std::vector<BuildNode> nodes;
  PiecewiseFn w_tilde;    // step majorant scaffold: 2^(l+1) on level-l pieces
  PiecewiseFn sigma;      // pointwise reciprocal of w

  const BuildNode& root() const { return nodes.front(); }
};

ConstructedWeight build_weight(const WeightParams& params);

struct TailSets {
  // index = level l, 0 <= l < nu
  std::vector<std::vector<TailRecord>> tails_by_level;
  std::vector<Rational> measure;        // |A_l|, exact
  std::vector<std::vector<TailRecord>> halves_by_level;  // concentric halves
  std::vector<Rational> half_measure;   // |A_l^*|, exact
};

/// Groups tail intervals by level and forms the concentric halves.
TailSets tail_sets(const ConstructedWeight& cw);

/// Expected |A_l| = ((1/2)(1 - 3^(1-k)))^l * 3^-k.
Rational expected_tail_measure(const WeightParams& params, long level);

struct EdgeAverages {
  QuadScalar prefix_sup;  // sup over 0 < tau <= h of avg over [lo, lo+tau)
  QuadScalar suffix_sup;  // sup over 0 < tau <= h of avg over [hi-tau, hi)
};

/// Exact one-sided running-average suprema over a node. The running average
/// is monotone between breakpoints, so scanning breakpoint candidates is
/// exhaustive.
EdgeAverages prefix_suffix_sup(const ConstructedWeight& cw, const BuildNode& node);

}  // namespace a2lab
