#include "claimproof/deck.hpp"

#include <algorithm>
#include <array>
#include <regex>
#include <sstream>

namespace claimproof {

namespace {

constexpr std::array<std::string_view, 13> kValueNames = {
    "2", "3", "4", "5", "6", "7", "8", "9", "10", "J", "Q", "K", "A"};
constexpr std::string_view kSuitLetters = "CDHS";

int standard_value(std::string_view token) {
  if (token == "T")
    return 9;
  for (std::size_t i = 0; i < kValueNames.size(); ++i)
    if (kValueNames[i] == token)
      return static_cast<int>(i) + 1;
  return 0;
}

std::string upper(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

int parse_index(const std::string &digits, std::string_view token) {
  // Guard against absurd lengths before stoi.
  if (digits.size() > 9)
    throw DeckError("card index out of range in '" + std::string(token) + "'");
  return std::stoi(digits);
}

} // namespace

void DeckSpec::validate() const {
  if (values < 1)
    throw DeckError("deck needs at least 1 value (got " + std::to_string(values) + ")");
  if (suits < 1)
    throw DeckError("deck needs at least 1 suit (got " + std::to_string(suits) + ")");
  if (wilds < 0)
    throw DeckError("wild count must be non-negative (got " + std::to_string(wilds) + ")");
  if (size() < 5)
    throw DeckError("deck has " + std::to_string(size()) +
                    " cards; at least 5 are needed for a hand (values*suits + wilds >= 5)");
}

Hand::Hand(std::vector<Card> cards) : cards_(std::move(cards)) {
  if (cards_.size() != kSize)
    throw DeckError("a hand holds exactly 5 cards (got " + std::to_string(cards_.size()) + ")");
  std::sort(cards_.begin(), cards_.end());
  if (std::adjacent_find(cards_.begin(), cards_.end()) != cards_.end())
    throw DeckError("a hand may not contain the same card twice");
}

int Hand::wild_count() const {
  return static_cast<int>(
      std::count_if(cards_.begin(), cards_.end(), [](const Card &c) { return c.is_wild(); }));
}

std::vector<Card> make_deck(const DeckSpec &spec) {
  spec.validate();
  std::vector<Card> deck;
  deck.reserve(static_cast<std::size_t>(spec.size()));
  for (int v = 1; v <= spec.values; ++v)
    for (int s = 1; s <= spec.suits; ++s)
      deck.push_back(Card::natural(v, s));
  for (int w = 1; w <= spec.wilds; ++w)
    deck.push_back(Card::joker(w));
  return deck;
}

void check_card(const Card &card, const DeckSpec &spec) {
  if (card.is_wild()) {
    if (card.wild < 1 || card.wild > spec.wilds)
      throw DeckError("wild W" + std::to_string(card.wild) + " not in a deck with " +
                      std::to_string(spec.wilds) + " wild(s)");
    return;
  }
  if (card.value < 1 || card.value > spec.values)
    throw DeckError("card value " + std::to_string(card.value) + " outside 1.." +
                    std::to_string(spec.values));
  if (card.suit < 1 || card.suit > spec.suits)
    throw DeckError("card suit " + std::to_string(card.suit) + " outside 1.." +
                    std::to_string(spec.suits));
}

Card parse_card(std::string_view text, const DeckSpec &spec) {
  static const std::regex standard("^(10|[2-9TJQKA])([CDHS])$", std::regex::icase);
  static const std::regex generic("^v([0-9]+)s([0-9]+)$", std::regex::icase);
  static const std::regex wild("^W([0-9]+)$", std::regex::icase);

  const std::string token(text);
  if (token.empty())
    throw DeckError("empty card token");
  std::smatch m;
  Card card;
  if (std::regex_match(token, m, standard)) {
    if (spec.values != 13)
      throw DeckError("standard card name '" + token + "' needs a 13-value deck; use v<value>s<suit>");
    card = Card::natural(standard_value(upper(m[1].str())),
                         static_cast<int>(kSuitLetters.find(upper(m[2].str())[0])) + 1);
  } else if (std::regex_match(token, m, generic)) {
    card = Card::natural(parse_index(m[1].str(), token), parse_index(m[2].str(), token));
  } else if (std::regex_match(token, m, wild)) {
    card = Card::joker(parse_index(m[1].str(), token));
    if (card.wild == 0)
      throw DeckError("wild cards are numbered from W1");
  } else {
    throw DeckError("unknown card token '" + token + "'");
  }
  check_card(card, spec);
  return card;
}

std::string render_card(const Card &card, const DeckSpec &spec) {
  if (card.is_wild())
    return "W" + std::to_string(card.wild);
  if (spec.is_standard_naming())
    return std::string(kValueNames[static_cast<std::size_t>(card.value - 1)]) +
           kSuitLetters[static_cast<std::size_t>(card.suit - 1)];
  return "v" + std::to_string(card.value) + "s" + std::to_string(card.suit);
}

Hand parse_hand(std::string_view text, const DeckSpec &spec) {
  std::istringstream in{std::string(text)};
  std::vector<Card> cards;
  for (std::string token; in >> token;)
    cards.push_back(parse_card(token, spec));
  return Hand(std::move(cards));
}

std::string render_hand(const Hand &hand, const DeckSpec &spec) {
  std::string out;
  for (const Card &c : hand.cards()) {
    if (!out.empty())
      out += ' ';
    out += render_card(c, spec);
  }
  return out;
}

BigInt binomial(std::uint64_t n, std::int64_t r) {
  if (r < 0 || static_cast<std::uint64_t>(r) > n)
    return 0;
  std::uint64_t k = std::min<std::uint64_t>(static_cast<std::uint64_t>(r),
                                            n - static_cast<std::uint64_t>(r));
  BigInt result = 1;
  // Each partial product is C(n-k+i, i), so the division is exact.
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

} // namespace claimproof
