#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "claimproof/deck.hpp"
#include "support/oracles.hpp"

using namespace claimproof;

TEST_CASE("make_deck sizes") {
  CHECK(make_deck(DeckSpec::standard()).size() == 52);

  const auto tiny = make_deck({1, 5, 0});
  REQUIRE(tiny.size() == 5);
  for (const Card &c : tiny)
    CHECK(c.value == 1);

  const auto jokers = make_deck({13, 4, 2});
  REQUIRE(jokers.size() == 54);
  CHECK(jokers[52] == Card::joker(1));
  CHECK(jokers[53] == Card::joker(2));
  CHECK(jokers[0] == Card::natural(1, 1));
  CHECK(jokers[1] == Card::natural(1, 2));
}

TEST_CASE("make_deck rejects decks too small for a hand") {
  CHECK_THROWS_WITH_AS(make_deck({2, 2, 0}), doctest::Contains("at least 5"), DeckError);
  CHECK_THROWS_WITH_AS(make_deck({0, 4, 0}), doctest::Contains("value"), DeckError);
  CHECK_THROWS_WITH_AS(make_deck({4, 0, 0}), doctest::Contains("suit"), DeckError);
  CHECK_THROWS_AS(make_deck({4, 4, -1}), DeckError);
  CHECK_NOTHROW(make_deck({2, 2, 1}));
}

TEST_CASE("make_deck output is distinct for many specs") {
  for (int v = 1; v <= 9; ++v)
    for (int s = 1; s <= 5; ++s)
      for (int w = 0; w <= 2; ++w) {
        const DeckSpec spec{v, s, w};
        if (spec.size() < 5)
          continue;
        const auto deck = make_deck(spec);
        CHECK(deck.size() == static_cast<std::size_t>(v * s + w));
        CHECK(std::set<Card>(deck.begin(), deck.end()).size() == deck.size());
      }
}

TEST_CASE("parse_card") {
  const DeckSpec standard = DeckSpec::standard();
  CHECK(parse_card("AS", standard) == Card::natural(13, 4));
  CHECK(parse_card("2C", standard) == Card::natural(1, 1));
  CHECK(parse_card("10h", standard) == Card::natural(9, 3));
  CHECK(parse_card("Td", standard) == Card::natural(9, 2));
  CHECK(parse_card("v1s1", standard) == Card::natural(1, 1));
  CHECK(parse_card("V7S3", DeckSpec{7, 3, 0}) == Card::natural(7, 3));
  CHECK(parse_card("W1", DeckSpec{13, 4, 1}) == Card::joker(1));
  CHECK(parse_card("w2", DeckSpec{13, 4, 2}) == Card::joker(2));

  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_card("", standard), DeckError);
    CHECK_THROWS_AS(parse_card("1S", standard), DeckError);
    CHECK_THROWS_AS(parse_card("AX", standard), DeckError);
    CHECK_THROWS_AS(parse_card("W1", standard), DeckError);
    CHECK_THROWS_AS(parse_card("W0", DeckSpec{13, 4, 1}), DeckError);
    CHECK_THROWS_AS(parse_card("v14s1", standard), DeckError);
    CHECK_THROWS_AS(parse_card("v1s5", standard), DeckError);
    CHECK_THROWS_AS(parse_card("AS", DeckSpec{12, 4, 0}), DeckError);
    CHECK_THROWS_AS(parse_card("AS", DeckSpec{13, 2, 0}), DeckError);
    CHECK_THROWS_AS(parse_card("v99999999999s1", standard), DeckError);
  }
}

TEST_CASE("render_card and parse_card round-trip on every card of random specs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> values(1, 20), suits(1, 6), wilds(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    DeckSpec spec{values(rng), suits(rng), wilds(rng)};
    if (trial % 10 == 0)
      spec.values = 13;
    if (spec.size() < 5)
      continue;
    for (const Card &c : make_deck(spec))
      REQUIRE(parse_card(render_card(c, spec), spec) == c);
  }
  CHECK(render_card(Card::natural(9, 4), DeckSpec::standard()) == "10S");
  CHECK(render_card(Card::natural(2, 3), DeckSpec{7, 3, 0}) == "v2s3");
}

TEST_CASE("Hand invariants") {
  const DeckSpec spec = DeckSpec::standard();
  CHECK_NOTHROW(parse_hand("10S JS QS KS AS", spec));
  CHECK_THROWS_AS(parse_hand("10S JS QS KS", spec), DeckError);
  CHECK_THROWS_AS(parse_hand("10S JS QS KS AS 2C", spec), DeckError);
  CHECK_THROWS_AS(parse_hand("10S JS QS KS TS", spec), DeckError);
  CHECK(parse_hand("W1 2C 2D 2H 2S", DeckSpec{13, 4, 1}).wild_count() == 1);
}

TEST_CASE("binomial identities and examples") {
  for (std::uint64_t n = 0; n <= 60; ++n) {
    CHECK(binomial(n, 0) == 1);
    CHECK(binomial(n, static_cast<std::int64_t>(n)) == 1);
    CHECK(binomial(n, -1) == 0);
    CHECK(binomial(n, static_cast<std::int64_t>(n) + 1) == 0);
  }
  // Independent routes: factorial formula and Pascal recurrence.
  CHECK(testing::factorial_binomial(52, 5) == 2598960);
  CHECK(testing::pascal_triangle(52)[52][5] == 2598960);
  CHECK(binomial(52, 5) == 2598960);
  CHECK(binomial(53, 5) == testing::factorial_binomial(53, 5));
}

TEST_CASE("binomial matches factorial formula and Pascal's triangle up to n = 100") {
  const auto pascal = testing::pascal_triangle(100);
  for (std::uint64_t n = 0; n <= 100; ++n)
    for (std::uint64_t r = 0; r <= n; ++r) {
      const auto rr = static_cast<std::int64_t>(r);
      const BigInt c = binomial(n, rr);
      REQUIRE(c == pascal[n][r]);
      REQUIRE(c == binomial(n, static_cast<std::int64_t>(n - r)));
      if (n >= 1 && r >= 1)
        REQUIRE(c == binomial(n - 1, rr - 1) + binomial(n - 1, rr));
      if (n % 10 == 0)
        REQUIRE(c == testing::factorial_binomial(n, r));
    }
  CHECK(binomial(100, 50).str() == "100891344545564193334812497256");
}
