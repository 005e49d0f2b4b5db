#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace claimproof {

using BigInt = boost::multiprecision::cpp_int;

/// Whether the top value may also play below value 1 in a straight (the wheel).
enum class AceRule { Both, HighOnly };

class DeckError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A generalized deck: values 1..values (values is the "ace"), suits 1..suits,
/// plus `wilds` jokers.
struct DeckSpec {
  int values = 13;
  int suits = 4;
  int wilds = 0;
  AceRule ace_rule = AceRule::Both;

  static DeckSpec standard() { return {}; }

  int natural_count() const { return values * suits; }
  int size() const { return values * suits + wilds; }
  bool is_standard_naming() const { return values == 13 && suits <= 4; }

  /// Throws DeckError naming the violated bound.
  void validate() const;

  bool operator==(const DeckSpec &) const = default;
};

struct Card {
  int value = 0; // 1..V for naturals
  int suit = 0;  // 1..S for naturals
  int wild = 0;  // 1..W for wilds, 0 for naturals

  static Card natural(int value, int suit) { return {value, suit, 0}; }
  static Card joker(int index) { return {0, 0, index}; }

  bool is_wild() const { return wild != 0; }

  bool operator==(const Card &) const = default;
  /// Naturals in value-major order, then wilds.
  std::strong_ordering operator<=>(const Card &o) const {
    if (auto c = wild <=> o.wild; c != 0)
      return c;
    if (auto c = value <=> o.value; c != 0)
      return c;
    return suit <=> o.suit;
  }
};

/// Exactly five distinct cards. Construction validates.
class Hand {
public:
  static constexpr std::size_t kSize = 5;

  explicit Hand(std::vector<Card> cards);

  const std::vector<Card> &cards() const { return cards_; }
  int wild_count() const;

private:
  std::vector<Card> cards_;
};

/// All V*S naturals in value-major order, then the W wilds.
std::vector<Card> make_deck(const DeckSpec &spec);

Card parse_card(std::string_view text, const DeckSpec &spec);
std::string render_card(const Card &card, const DeckSpec &spec);

/// Parses whitespace-separated card tokens into a Hand.
Hand parse_hand(std::string_view text, const DeckSpec &spec);
std::string render_hand(const Hand &hand, const DeckSpec &spec);

/// Checks that `card` exists in the deck described by `spec`.
void check_card(const Card &card, const DeckSpec &spec);

/// C(n, r); zero when r < 0 or r > n.
BigInt binomial(std::uint64_t n, std::int64_t r);

} // namespace claimproof
