#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "a2lab/float_interval.hpp"
#include "a2lab/piecewise.hpp"
#include "a2lab/quad_scalar.hpp"
#include "a2lab/rational.hpp"
#include "a2lab/weight.hpp"

using namespace a2lab;

namespace {

Rational random_rat(std::mt19937_64& rng, long max_num = 60, long max_den = 24) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return rat(num(rng), den(rng));
}

QuadScalar random_quad(std::mt19937_64& rng, const Rational& disc) {
  return QuadScalar::make(random_rat(rng), random_rat(rng), disc);
}

PiecewiseFn random_pcf(std::mt19937_64& rng, const Rational& disc,
                       bool positive = false) {
  std::uniform_int_distribution<int> count(1, 6);
  const int n = count(rng);
  std::vector<Rational> cuts;
  std::uniform_int_distribution<long> pos(1, 47);
  for (int i = 0; i + 1 < n; ++i) cuts.push_back(rat(pos(rng), 48));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Piece> pieces;
  Rational lo = 0;
  for (size_t i = 0; i <= cuts.size(); ++i) {
    const Rational hi = i < cuts.size() ? cuts[i] : Rational(1);
    QuadScalar v = random_quad(rng, disc);
    if (positive && v.sgn() <= 0) v = v * v + Rational(1);
    pieces.push_back({lo, hi, std::move(v)});
    lo = hi;
  }
  return PiecewiseFn::from_pieces(std::move(pieces));
}

}  // namespace

TEST_CASE("rational strings round-trip and stay canonical") {
  CHECK(rat_to_string(rat(2, 4)) == "1/2");
  CHECK(rat_to_string(rat(-6, 4)) == "-3/2");
  CHECK(rat_to_string(rat(5)) == "5");
  CHECK(rat_from_string("22/7") == rat(22, 7));
  CHECK(rat_from_string("-3") == rat(-3));
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
  CHECK(pow3(-2) == rat(1, 9));
  CHECK(pow2(5) == rat(32));
  CHECK(floor_rat(rat(-7, 2)) == -4);
  CHECK(*exact_sqrt(rat(36, 25)) == rat(6, 5));
  CHECK(!exact_sqrt(rat(858, 49)).has_value());
}

TEST_CASE("quadratic scalars: identities and normalization") {
  const Rational d = rat(858, 49);
  // Reciprocal of one is one.
  CHECK(QuadScalar(1).recip() == QuadScalar(1));
  // Perfect-square discriminant collapses to a rational.
  const QuadScalar x = QuadScalar::make(1, 1, rat(36, 25));
  CHECK(x.is_rational());
  CHECK(x.as_rational() == rat(11, 5));
  // Sign with the rational part dominating: 33^2 = 1089 beats 858, the exact
  // integer comparison behind 1 vs (7/33) sqrt(858/49).
  const QuadScalar y = QuadScalar::make(1, rat(-7, 33), d);
  CHECK(y.sgn() > 0);
  CHECK(QuadScalar::make(1, rat(-8, 29), d).sgn() < 0);  // 841 < 858*64/49... scaled
  CHECK(QuadScalar::make(-1, rat(7, 33), d).sgn() < 0);
  CHECK(QuadScalar::make(0, rat(1), d).sgn() > 0);
}

TEST_CASE("quadratic scalars: field arithmetic") {
  const Rational d = rat(858, 49);
  const QuadScalar u = QuadScalar::make(rat(2, 3), rat(1, 5), d);
  const QuadScalar v = QuadScalar::make(rat(-1, 2), rat(3, 7), d);
  CHECK((u + v) - v == u);
  CHECK(u * v == v * u);
  CHECK((u * v).disc() == d);
  CHECK(u * u.recip() == QuadScalar(1));
  CHECK_THROWS_AS(QuadScalar().recip(), std::domain_error);
  const QuadScalar other = QuadScalar::make(1, 1, rat(2));
  CHECK_THROWS_AS(u + other, std::invalid_argument);
  CHECK_NOTHROW(u + QuadScalar(rat(1, 2)));  // rationals join any field
}

TEST_CASE("property: x * recip(x) == 1 and exact compare matches 200-digit floats") {
  std::mt19937_64 rng(0xa2'1ab0);
  const mpfr_prec_t prec = digits_to_bits(200);
  const Rational d = rat(858, 49);
  int compared = 0;
  for (int i = 0; i < 1000; ++i) {
    const QuadScalar x = random_quad(rng, d);
    if (x.sgn() != 0) CHECK(x * x.recip() == QuadScalar(1));
    const QuadScalar y = random_quad(rng, d);
    const int c = x.cmp(y);
    const FloatInterval fx = FloatInterval::of_quad(x, prec);
    const FloatInterval fy = FloatInterval::of_quad(y, prec);
    if (c < 0) {
      CHECK(fx.certainly_lt(fy));
      ++compared;
    } else if (c > 0) {
      CHECK(fy.certainly_lt(fx));
      ++compared;
    } else {
      CHECK(!fx.certainly_lt(fy));
      CHECK(!fy.certainly_lt(fx));
    }
  }
  CHECK(compared > 900);
}

TEST_CASE("float intervals enclose and order correctly") {
  const mpfr_prec_t prec = digits_to_bits(50);
  const FloatInterval l3 = FloatInterval::log_of_rational(rat(3), prec);
  CHECK(l3.certainly_ge(rat(10986, 10000)));
  CHECK(l3.certainly_le(rat(10987, 10000)));
  CHECK(l3.width_double() < 1e-40);
  const FloatInterval s2 = FloatInterval::sqrt_of_rational(rat(2), prec);
  const FloatInterval prod = s2 * s2;
  CHECK(prod.certainly_ge(rat(19999999, 10000000)));
  CHECK(prod.certainly_le(rat(20000001, 10000000)));
  const FloatInterval neg = -l3;
  CHECK(neg.certainly_negative());
  CHECK(neg.abs().certainly_positive());
  CHECK_THROWS_AS(FloatInterval::log_of_rational(rat(0), prec), std::domain_error);
}

TEST_CASE("base two-piece block integrates to its average exactly") {
  // Values omega(1 +- sqrt(disc)/p) at k = 2: 5/3 and 1/3 on the halves.
  const WeightParams prm = derive_params_from_k(2, 0);
  const BlockResult blk = build_block(0, 0, 1, 0, prm);
  const PiecewiseFn f = PiecewiseFn::from_pieces(blk.pieces);
  CHECK(f.piece_count() == 2);
  CHECK(f.value(0).as_rational() == rat(5, 3));
  CHECK(f.value(1).as_rational() == rat(1, 3));
  CHECK(f.total_integral() == QuadScalar(1));
  CHECK(f.reciprocal().total_integral().as_rational() == rat(9, 5));
  // Constant function: integral over a prefix is value * length.
  const PiecewiseFn c(0, 1, QuadScalar(rat(7, 3)));
  CHECK(c.integrate(0, rat(2, 5)) == QuadScalar(rat(14, 15)));
}

TEST_CASE("pointwise operations are exact") {
  std::vector<Piece> pieces{{0, rat(1, 2), QuadScalar(rat(5, 3))},
                            {rat(1, 2), 1, QuadScalar(rat(1, 3))}};
  const PiecewiseFn f = PiecewiseFn::from_pieces(pieces);
  const PiecewiseFn r = f.reciprocal();
  CHECK(r.value(0).as_rational() == rat(3, 5));
  CHECK(r.value(1).as_rational() == rat(3));
  CHECK(r.reciprocal() == f);
  const PiecewiseFn sq = PiecewiseFn(0, 1, QuadScalar(2)).squared();
  CHECK(sq.value(0).as_rational() == rat(4));
  CHECK_THROWS_AS(PiecewiseFn(0, 1, QuadScalar(0)).reciprocal(), std::domain_error);
}

TEST_CASE("energy integral of the step majorant scaffold, k=2 full depth") {
  // Independent oracle: plain summation over the eleven hand-expanded pieces,
  // using only machine literals.
  struct Row {
    long len_num, len_den;      // piece length
    long t_num;                 // scaffold value (integer)
    long s_num, s_den;          // reciprocal weight on the piece
  };
  const Row rows[] = {
      {1, 3, 2, 9, 5},   {1, 9, 4, 9, 10},  {1, 27, 8, 9, 20},
      {1, 54, 16, 3, 40}, {1, 54, 16, 3, 8}, {2, 81, 8, 9, 20},
      {1, 81, 8, 9, 8},  {2, 27, 4, 9, 10}, {1, 27, 4, 9, 4},
      {2, 9, 2, 9, 5},   {1, 9, 2, 9, 2},
  };
  Rational oracle = 0;
  for (const Row& r : rows)
    oracle += rat(r.len_num, r.len_den) * rat(r.t_num) * rat(r.t_num) *
              rat(r.s_num, r.s_den);
  CHECK(oracle == rat(74, 5));

  const ConstructedWeight cw = build_weight(derive_params_from_k(2));
  const QuadScalar energy =
      cw.w_tilde.squared().multiply(cw.sigma).total_integral();
  CHECK(energy.sgn() > 0);
  CHECK(energy.as_rational() == oracle);
}

TEST_CASE("restriction and affine reparametrization") {
  const ConstructedWeight cw = build_weight(derive_params_from_k(2));
  const PiecewiseFn right = cw.w.restrict_to(rat(2, 3), 1);
  // Values on the three thirds of [2/3, 1): 5/9, 5/9, 2/9.
  CHECK(right.eval(rat(7, 10)).as_rational() == rat(5, 9));
  CHECK(right.eval(rat(31, 36)).as_rational() == rat(5, 9));
  CHECK(right.eval(rat(17, 18)).as_rational() == rat(2, 9));
  CHECK(right.integrate(rat(2, 3), 1).as_rational() == rat(4, 27));

  const PiecewiseFn c(0, 1, QuadScalar(rat(3, 7)));
  const PiecewiseFn cm = c.affine_to(rat(1, 3), rat(4, 9));
  CHECK(cm.domain_lo() == rat(1, 3));
  CHECK(cm.value(0).as_rational() == rat(3, 7));

  std::vector<Piece> two{{0, rat(1, 2), QuadScalar(1)}, {rat(1, 2), 1, QuadScalar(2)}};
  const PiecewiseFn mapped = PiecewiseFn::from_pieces(two).affine_to(rat(1, 3), rat(4, 9));
  CHECK(mapped.interior_breakpoints()[0] == rat(1, 3) + rat(1, 9) / 2);

  CHECK_THROWS_AS(c.restrict_to(rat(1, 2), rat(1, 2)), std::out_of_range);
  CHECK_THROWS_AS(c.restrict_to(rat(-1, 2), rat(1, 2)), std::out_of_range);
}

TEST_CASE("periodic evaluation and integration") {
  const ConstructedWeight cw = build_weight(derive_params_from_k(2));
  const PeriodicFn& pw = cw.periodic;
  CHECK(pw.integrate(0, 5).as_rational() == 5);
  CHECK(pw.eval(1 + rat(1, 18)) == pw.eval(rat(1, 18)));
  CHECK(pw.eval(rat(-1, 18)) == pw.eval(rat(17, 18)));
  CHECK(pw.integrate(rat(-1, 9), rat(1, 9)).as_rational() == rat(7, 81));
  CHECK(pw.integrate(rat(-7, 3), rat(-7, 3)) == QuadScalar(0));
}

TEST_CASE("property: integration is additive and linear") {
  std::mt19937_64 rng(0x5eed);
  const Rational d = rat(858, 49);
  for (int i = 0; i < 200; ++i) {
    const PiecewiseFn f = random_pcf(rng, d);
    const PiecewiseFn g = random_pcf(rng, d);
    const Rational mid = rat(std::uniform_int_distribution<long>(1, 47)(rng), 48);
    CHECK(f.integrate(0, mid) + f.integrate(mid, 1) == f.total_integral());
    CHECK(f.add(g).total_integral() == f.total_integral() + g.total_integral());
    const PiecewiseFn fp = random_pcf(rng, d, /*positive=*/true);
    CHECK(fp.reciprocal().reciprocal() == fp);
  }
}
