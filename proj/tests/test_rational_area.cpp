#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "umst/area.hpp"

using namespace umst;

TEST_CASE("decimal parsing is exact") {
  CHECK(parse_weight("3.25") == Weight(13, 4));
  CHECK(parse_weight("-4.5") == Weight(-9, 2));
  CHECK(parse_weight("0.125") == Weight(1, 8));
  CHECK(parse_weight("12") == Weight(12));
  CHECK(parse_weight("  7 ") == Weight(7));
  CHECK(parse_weight("7/3") == Weight(7, 3));
  CHECK(parse_weight("-2/6") == Weight(-1, 3));
  CHECK(parse_weight("0.1") == Weight(1, 10));
  CHECK_THROWS_AS(parse_weight(""), Error);
  CHECK_THROWS_AS(parse_weight("1.2.3"), Error);
  CHECK_THROWS_AS(parse_weight("abc"), Error);
  CHECK_THROWS_AS(parse_weight("1/0"), Error);
}

TEST_CASE("formatting round-trips and prefers decimals") {
  CHECK(format_weight(Weight(13, 4)) == "3.25");
  CHECK(format_weight(Weight(-9, 2)) == "-4.5");
  CHECK(format_weight(Weight(7, 3)) == "7/3");
  CHECK(format_weight(Weight(5)) == "5");
  CHECK(format_weight(Weight(0)) == "0");
  CHECK(format_weight(Weight(1, 10)) == "0.1");
  CHECK(format_weight(Weight(1, 1024)) == "0.0009765625");

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-500, 500), den(1, 64);
  for (int i = 0; i < 500; ++i) {
    Weight w(num(rng), den(rng));
    CHECK(parse_weight(format_weight(w)) == w);
  }
}

TEST_CASE("weights convert exactly from doubles") {
  CHECK(weight_from_double(0.5) == Weight(1, 2));
  CHECK(weight_from_double(7.0) == Weight(7));
  double x = 0.1;
  Weight w = weight_from_double(x);
  CHECK(weight_to_double(w) == x);  // exact binary value round-trips
}

TEST_CASE("area construction and classification") {
  Area t = Area::make(Weight(1), Weight(1), false, false);
  CHECK(t.is_trivial());
  CHECK_FALSE(t.is_open());

  Area b = Area::make(Weight(3), Weight(7), true, true);
  CHECK(b.is_open());
  CHECK_FALSE(b.is_trivial());

  Area half = Area::make(Weight(2), Weight(4), true, false);  // (2,4]
  CHECK_FALSE(half.is_open());
  CHECK_FALSE(half.is_trivial());
  CHECK(half.str() == "(2,4]");

  CHECK_THROWS_MATCHES(Area::make(Weight(5), Weight(3), false, false), Error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("malformed-area")));
  CHECK_THROWS_MATCHES(Area::make(Weight(2), Weight(2), true, false), Error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("empty-area")));
}

TEST_CASE("membership respects endpoint openness") {
  Area b = Area::open(Weight(3), Weight(7));
  CHECK(b.contains(Weight(6)));
  CHECK_FALSE(b.contains(Weight(3)));
  CHECK_FALSE(b.contains(Weight(7)));
  CHECK(Area::trivial(Weight(1)).contains(Weight(1)));

  Area half = Area::make(Weight(2), Weight(4), true, false);
  CHECK(half.contains(Weight(4)));
  CHECK_FALSE(half.contains(Weight(2)));
}

TEST_CASE("limits") {
  CHECK(Area::open(Weight(3), Weight(7)).sup() == Weight(7));
  CHECK(Area::trivial(Weight(1)).inf() == Weight(1));
  CHECK(Area::make(Weight(2), Weight(4), true, false).sup() == Weight(4));
}

TEST_CASE("narrowing") {
  Area c = Area::open(Weight(5), Weight(9));
  Area narrowed = c.narrowed(Weight(8));
  CHECK(narrowed.is_trivial());
  CHECK(narrowed.inf() == Weight(8));
  CHECK(Area::trivial(Weight(1)).narrowed(Weight(1)).is_trivial());
  CHECK_THROWS_AS(Area::open(Weight(3), Weight(7)).narrowed(Weight(7)), Error);
}

TEST_CASE("contained weights stay within limits, narrowing stays contained") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> grid(-40, 40), width(1, 24), flip(0, 1);
  for (int i = 0; i < 1000; ++i) {
    Weight lo(grid(rng), 4);
    Weight hi = lo + Weight(width(rng), 4);
    Area a = Area::make(lo, hi, flip(rng), flip(rng));
    std::uniform_int_distribution<int> step(1, 15);
    Weight w = lo + (hi - lo) * step(rng) / 16;  // strictly inside
    REQUIRE(a.contains(w));
    CHECK(a.inf() <= w);
    CHECK(w <= a.sup());
    if (a.lo_open) CHECK(a.inf() < w);
    if (a.hi_open) CHECK(w < a.sup());
    Area n = a.narrowed(w);
    CHECK(n.is_trivial());
    CHECK(a.covers(n));
  }
}

TEST_CASE("tolerant ordering merges values within tau") {
  WeightOrder exact{Weight(0)};
  CHECK(exact.lt(Weight(1), Weight(2)));
  CHECK(exact.eq(Weight(2), Weight(2)));
  CHECK_FALSE(exact.eq(Weight(2), Weight(2) + Weight(1, 1000000000)));

  WeightOrder fuzzy{Weight(1, 1000000000)};
  CHECK(fuzzy.eq(Weight(3), Weight(3) + Weight(1, 2000000000)));
  CHECK(fuzzy.ge(Weight(3), Weight(3) + Weight(1, 2000000000)));
  CHECK(fuzzy.lt(Weight(3), Weight(4)));
  CHECK_FALSE(fuzzy.gt(Weight(3) + Weight(1, 2000000000), Weight(3)));
}

TEST_CASE("tolerant membership is lenient at the noise scale") {
  WeightOrder fuzzy{Weight(1, 1000000000)};
  Area a = Area::open(Weight(7), Weight(11));
  CHECK(a.contains(Weight(7), fuzzy));                          // boundary ok under tau
  CHECK(a.contains(Weight(7) - Weight(1, 2000000000), fuzzy));  // just outside, within tau
  CHECK_FALSE(a.contains(Weight(6), fuzzy));
  WeightOrder exact{Weight(0)};
  CHECK_FALSE(a.contains(Weight(7), exact));
}
