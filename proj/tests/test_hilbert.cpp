#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "a2lab/hilbert.hpp"
#include "a2lab/quadrature.hpp"
#include "a2lab/weight.hpp"

using namespace a2lab;

namespace {
constexpr mpfr_prec_t kPrec = 180;  // ~50 decimal digits

double mid(const FloatInterval& v) { return v.mid_double(); }
}  // namespace

TEST_CASE("closed forms: box transforms") {
  const PiecewiseFn box(0, 1, QuadScalar(1));
  HilbertEvaluator h(hilbert_terms(box), kPrec);
  // H(chi_[0,1))(2) = ln 2.
  const FloatInterval at2 = h.at(2);
  CHECK(at2.certainly_gt(rat(693147, 1000000)));
  CHECK(at2.certainly_le(rat(693148, 1000000)));
  CHECK(at2.width_double() < 1e-40);

  // Symmetric box vanishes at the center.
  const PiecewiseFn sym(-1, 1, QuadScalar(1));
  HilbertEvaluator hs(hilbert_terms(sym), kPrec);
  CHECK(hs.at(0).contains_zero());
  CHECK(hs.at(0).width_double() < 1e-40);

  // Sign change exactly at the center of the support.
  CHECK(hs.at(rat(-1, 7)).certainly_negative());
  CHECK(hs.at(rat(1, 7)).certainly_positive());

  CHECK_THROWS_AS(h.at(1), std::domain_error);
  CHECK_THROWS_AS(h.at(0), std::domain_error);
}

TEST_CASE("term list mirrors the piece list") {
  const ConstructedWeight cw = build_weight(derive_params_from_k(2));
  const auto terms = hilbert_terms(cw.w);
  REQUIRE(terms.size() == cw.w.piece_count());
  for (size_t i = 0; i < terms.size(); ++i) {
    CHECK(terms[i].a == cw.w.piece_lo(i));
    CHECK(terms[i].b == cw.w.piece_hi(i));
    CHECK(terms[i].coeff == cw.w.value(i));
  }
}

TEST_CASE("k=2 transform at the outer tail center is positive (frozen sign)") {
  const ConstructedWeight cw = build_weight(derive_params_from_k(2));
  HilbertEvaluator h(hilbert_terms(cw.w), kPrec);
  const FloatInterval v = h.at(rat(17, 18));
  CHECK(v.certainly_positive());
  // Frozen from a 60-digit closed-form summation of the eleven terms.
  CHECK(v.certainly_gt(rat_from_string("2638658481648766615/1000000000000000000")));
  CHECK(v.certainly_le(rat_from_string("2638658481648766616/1000000000000000000")));
}

TEST_CASE("property: antisymmetry under reflection on sample points") {
  std::mt19937_64 rng(0xf1ea);
  std::uniform_int_distribution<long> cut(1, 23);
  std::uniform_int_distribution<long> val(1, 9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> cuts{rat(cut(rng), 24), rat(cut(rng), 24)};
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Piece> pieces;
    Rational lo = 0;
    for (size_t i = 0; i <= cuts.size(); ++i) {
      const Rational hi = i < cuts.size() ? cuts[i] : Rational(1);
      pieces.push_back({lo, hi, QuadScalar(rat(val(rng), 3))});
      lo = hi;
    }
    const PiecewiseFn f = PiecewiseFn::from_pieces(pieces);
    // Reflection through the origin: pieces reversed onto [-1, 0).
    std::vector<Piece> rpieces;
    for (size_t i = pieces.size(); i-- > 0;)
      rpieces.push_back({-pieces[i].hi, -pieces[i].lo, pieces[i].value});
    const PiecewiseFn fr = PiecewiseFn::from_pieces(rpieces);
    HilbertEvaluator h(hilbert_terms(f), kPrec);
    HilbertEvaluator hr(hilbert_terms(fr), kPrec);
    for (const Rational x : {rat(9, 7), rat(1, 5), rat(-3, 11)}) {
      const FloatInterval a = hr.at(x);
      const FloatInterval b = -h.at(-x);
      CHECK(std::abs(mid(a) - mid(b)) < 1e-30);
    }
  }
}

TEST_CASE("quadrature oracle: squared L2 norm of the box transform is pi^2/3") {
  const PiecewiseFn box(0, 1, QuadScalar(1));
  const QuadratureResult r = hilbert_l2sigma_of(box, 1e-8, 2);
  const double target = M_PI * M_PI / 3.0;
  CHECK(std::abs(r.value_sq - target) < 1e-6 * target);
  CHECK(r.error_bound < 1e-6 * target);
  CHECK(r.node_count > 1000);
}

TEST_CASE("quadrature agrees with a plain high-node midpoint oracle, k=2") {
  const ConstructedWeight cw = build_weight(derive_params_from_k(2));
  const QuadratureResult r = hilbert_l2sigma(cw, 1e-8, 2);

  // Independent check: direct term summation (no treecode) on a geometric
  // composite midpoint rule, accurate to a few 1e-7 relative.
  const auto terms = hilbert_terms(cw.w);
  double oracle = 0;
  for (size_t i = 0; i < cw.w.piece_count(); ++i) {
    const double A = cw.w.piece_lo(i).get_d();
    const double B = cw.w.piece_hi(i).get_d();
    const double sig = 1.0 / cw.w.value(i).to_double();
    const int cells = 2200;
    double acc = 0;
    // geometric mesh refined toward both ends
    std::vector<double> edges;
    edges.push_back(A);
    const double L = B - A;
    for (int c = 40; c >= 1; --c) edges.push_back(A + L * 0.5 * std::pow(2.0, -c));
    for (int c = 1; c <= 40; ++c) edges.push_back(B - L * 0.5 * std::pow(2.0, -c));
    edges.push_back(B);
    for (size_t e = 0; e + 1 < edges.size(); ++e) {
      const double lo = edges[e], hi = edges[e + 1];
      const int sub = cells / static_cast<int>(edges.size());
      for (int s = 0; s < sub; ++s) {
        const double x = lo + (hi - lo) * (s + 0.5) / sub;
        double hsum = 0;
        for (const LogTerm& t : terms)
          hsum += t.coeff.to_double() *
                  (std::log(std::fabs(x - t.a.get_d())) -
                   std::log(std::fabs(x - t.b.get_d())));
        acc += hsum * hsum * (hi - lo) / sub;
      }
    }
    oracle += sig * acc;
  }
  CHECK(std::abs(r.value_sq - oracle) < 5e-4 * oracle);
  CHECK(r.value == std::sqrt(r.value_sq));

  // Frozen regression fixture (60-digit independent quadrature).
  CHECK(r.value == doctest::Approx(5.168732559594321514).epsilon(1e-6));
  CHECK(r.value_sq == doctest::Approx(26.715796272610466404).epsilon(1e-6));
}

TEST_CASE("quadrature self-consistency: error bound dominates refinement visibly") {
  const ConstructedWeight cw = build_weight(derive_params_from_k(2));
  const QuadratureResult a = hilbert_l2sigma(cw, 1e-6, 1);
  const QuadratureResult b = hilbert_l2sigma(cw, 1e-10, 2);
  CHECK(std::abs(a.value_sq - b.value_sq) <= a.error_bound + b.error_bound);
}

TEST_CASE("exact identity: integral of w^2 sigma over one period equals 1") {
  for (long k = 2; k <= 3; ++k) {
    const ConstructedWeight cw = build_weight(derive_params_from_k(k));
    const QuadScalar v = cw.w.squared().multiply(cw.sigma).total_integral();
    CHECK(v == QuadScalar(1));
  }
}
