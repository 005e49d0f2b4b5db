#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "claimproof/deck.hpp"
#include "claimproof/proof.hpp"

namespace claimproof {

using BigRational = boost::multiprecision::cpp_rational;

/// Ten categories in precedence order; a smaller enumerator is stronger.
enum class HandCategory {
  RoyalFlush,
  StraightFlush,
  FourOfAKind,
  FullHouse,
  Flush,
  Straight,
  ThreeOfAKind,
  TwoPair,
  Pair,
  HighCard,
};

inline constexpr std::array<HandCategory, 10> kAllCategories = {
    HandCategory::RoyalFlush,   HandCategory::StraightFlush, HandCategory::FourOfAKind,
    HandCategory::FullHouse,    HandCategory::Flush,         HandCategory::Straight,
    HandCategory::ThreeOfAKind, HandCategory::TwoPair,       HandCategory::Pair,
    HandCategory::HighCard,
};

inline constexpr std::size_t index_of(HandCategory c) { return static_cast<std::size_t>(c); }

/// True when `a` outranks `b`.
inline constexpr bool stronger(HandCategory a, HandCategory b) { return a < b; }

/// Kebab-case name, e.g. "full-house".
std::string_view to_string(HandCategory category);
/// Title-case name, e.g. "Full House".
std::string_view display_name(HandCategory category);
/// Accepts kebab-case (case-insensitive); nullopt if unknown.
std::optional<HandCategory> parse_category(std::string_view text);

class UnsupportedConfiguration : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct Classification {
  HandCategory category;
  /// Five cards of one value; outside the ten categories, so reported as FourOfAKind.
  bool five_of_a_kind = false;

  bool operator==(const Classification &) const = default;
};

/// Distinct 5-value sets that count as straights under `spec`'s ace rule,
/// each sorted ascending. The top run {V-4..V}, when present, is last.
std::vector<std::array<int, 5>> straight_runs(const DeckSpec &spec);

/// Classifies five natural cards. Repeated cards are permitted so the result of a
/// wild substitution can be classified directly.
Classification classify_cards(std::span<const Card, 5> cards, const DeckSpec &spec);

/// Wild-free hands only; throws UnsupportedConfiguration if a wild is present.
HandCategory classify(const Hand &hand, const DeckSpec &spec);

/// Best category reachable by replacing each wild with any natural card.
Classification classify_with_wilds(const Hand &hand, const DeckSpec &spec);

/// C(n, r)^exponent.
struct BinomialTerm {
  std::int64_t n = 0;
  std::int64_t r = 0;
  int exponent = 1;

  BigInt value() const;
  std::string render() const;
};

/// One "choose ..." step: the number of ways is `ways`, minus `excluded` if present.
struct ChoiceFactor {
  std::string choice;
  BinomialTerm ways;
  std::optional<BinomialTerm> excluded;

  BigInt value() const;
  std::string render() const;
};

struct FormulaTerm {
  std::string description;
  std::vector<ChoiceFactor> factors;

  BigInt value() const;
  std::string render() const;
};

/// Count as a sum of products of choice steps.
struct CountFormula {
  HandCategory category;
  std::vector<FormulaTerm> terms;

  BigInt value() const;
};

/// Throws UnsupportedConfiguration when the deck has wilds.
CountFormula closed_form(HandCategory category, const DeckSpec &spec);
BigInt count_category(HandCategory category, const DeckSpec &spec);

struct ExactProbability {
  BigInt numerator;
  BigInt denominator;

  BigRational reduced() const { return BigRational(numerator, denominator); }
  std::string unreduced_text() const;
  std::string reduced_text() const;
  /// Six significant digits; approximate.
  std::string decimal_text() const;
  /// "<num>/<den> = <num'>/<den'> (approx. <decimal>)"
  std::string render() const;
};

ExactProbability probability(HandCategory category, const DeckSpec &spec);

struct PlayerEntry {
  std::string name;
  HandCategory category;
};

struct RankedEntry {
  std::string name;
  HandCategory category;
  ExactProbability probability;
};

struct WinnerReport {
  enum class Outcome { Winner, Tie, NoWinner };

  Outcome outcome = Outcome::NoWinner;
  /// One name for Winner, all minimal names for Tie, empty for NoWinner.
  std::vector<std::string> winners;
  /// Possible hands, ascending by probability, then by name.
  std::vector<RankedEntry> ranking;
  /// Players holding a category of probability zero for this deck.
  std::vector<std::string> impossible;

  std::string render() const;
};

/// The hand with the lowest probability wins. Throws std::invalid_argument on no entries.
WinnerReport determine_winner(std::span<const PlayerEntry> entries, const DeckSpec &spec);

ProofDocument combinatorial_proof(HandCategory category, const DeckSpec &spec);

} // namespace claimproof
