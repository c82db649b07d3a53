#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "a2lab/lattice.hpp"

using namespace a2lab;

TEST_CASE("triadic parent/child structure") {
  const TriadicInterval t{0, 0};  // [0,1)
  auto ch = t.children();
  CHECK(ch[0].lo() == 0);
  CHECK(ch[0].hi() == rat(1, 3));
  CHECK(ch[2].hi() == 1);
  for (const auto& c : ch) CHECK(c.parent() == t);
  CHECK(TriadicInterval{-1, -1}.parent() == TriadicInterval{0, -1});
  CHECK(t.contains(ch[1]));
  CHECK(!ch[1].contains(t));
}

TEST_CASE("cover recipe: fixed examples") {
  // |I| = 3/10 lands at scale 1/3, position 1.
  const JPair j1 = cover_with_j(rat(2, 5), rat(7, 10));
  CHECK(j1.lo() == rat(1, 3));
  CHECK(j1.hi() == 1);
  CHECK(j1.length() / (rat(7, 10) - rat(2, 5)) == rat(20, 9));

  // Unit interval: ratio exactly 6.
  const JPair j2 = cover_with_j(0, 1);
  CHECK(j2.lo() == 0);
  CHECK(j2.hi() == 6);

  // Triadic input [1/3, 2/3): the recipe scale for |I| = 1/3 is 3^0, so the
  // cover is [0, 2) at the worst-case ratio 6.
  const JPair j3 = cover_with_j(rat(1, 3), rat(2, 3));
  CHECK(j3.lo() == 0);
  CHECK(j3.hi() == 2);

  CHECK_THROWS_AS(cover_with_j(rat(1, 2), rat(1, 2)), std::invalid_argument);
}

TEST_CASE("property: cover contains the interval at ratio <= 6 (1000 random)") {
  std::mt19937_64 rng(0xc0ffee);
  std::uniform_int_distribution<long> num(-4000, 4000);
  std::uniform_int_distribution<long> den(1, 1000);
  std::uniform_int_distribution<int> mag(-8, 4);
  for (int i = 0; i < 1000; ++i) {
    const Rational lo = rat(num(rng), den(rng));
    Rational len = rat(std::abs(num(rng)) + 1, den(rng)) * pow3(mag(rng));
    const Rational hi = lo + len;
    const JPair j = cover_with_j(lo, hi);
    CHECK(j.lo() <= lo);
    CHECK(j.hi() >= hi);
    CHECK(j.length() <= 6 * len);
  }
}

TEST_CASE("classification splits pairs into two lattices") {
  CHECK(classify_j({0, 0}) == 1);  // [0, 2)
  CHECK(classify_j({0, 1}) == 2);  // [1, 3)
  CHECK(classify_j({-2, -3}) == 2);
  // Trisection stays in class and partitions.
  const JPair j{0, 0};
  const auto kids = j_trisect(j);
  CHECK(kids[0].lo() == 0);
  CHECK(kids[0].hi() == rat(2, 3));
  CHECK(kids[1].hi() == rat(4, 3));
  CHECK(kids[2].hi() == 2);
  for (const auto& c : kids) CHECK(classify_j(c) == classify_j(j));
}

TEST_CASE("property: trisection-closure on random pairs, tiling at 10 scales") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> sc(-6, 6);
  std::uniform_int_distribution<std::int64_t> ps(-2000, 2000);
  for (int i = 0; i < 100; ++i) {
    const JPair j{sc(rng), ps(rng)};
    const auto kids = j_trisect(j);
    CHECK(kids[0].lo() == j.lo());
    CHECK(kids[2].hi() == j.hi());
    CHECK(kids[0].hi() == kids[1].lo());
    CHECK(kids[1].hi() == kids[2].lo());
    for (const auto& c : kids) CHECK(classify_j(c) == classify_j(j));
  }
  // Same-class pairs abut with no overlap: at each scale the class-1 pairs
  // are [.., 2m, 2m+2, ..) and likewise for class 2.
  for (int s = -5; s < 5; ++s) {
    const auto all = enumerate_j(s, 0, 1);
    std::set<std::int64_t> evens, odds;
    for (const auto& j : all) (classify_j(j) == 1 ? evens : odds).insert(j.pos);
    for (auto it = evens.begin(); std::next(it) != evens.end(); ++it)
      CHECK(*std::next(it) == *it + 2);
    for (auto it = odds.begin(); std::next(it) != odds.end(); ++it)
      CHECK(*std::next(it) == *it + 2);
  }
}

TEST_CASE("enumeration counts") {
  const auto j = enumerate_j(-1, 0, 1);
  REQUIRE(j.size() == 4);
  CHECK(j.front().pos == -1);
  CHECK(j.back().pos == 2);
  // 3^m + 1 pairs of length 2*3^-m meet [0, 1).
  for (int m = 1; m <= 5; ++m) {
    long count = 1;
    for (int i = 0; i < m; ++i) count *= 3;
    CHECK(enumerate_j(-m, 0, 1).size() == static_cast<size_t>(count) + 1);
  }
  CHECK(enumerate_j(2, rat(1, 2), rat(1, 2)).empty());
  // Exact-edge windows exclude pairs touching only at the boundary.
  const auto edge = enumerate_j(0, 2, 3);
  for (const auto& p : edge) {
    CHECK(p.lo() < 3);
    CHECK(p.hi() > 2);
  }
}
