#include "claimproof/hands.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>

namespace claimproof {

namespace {

struct CategoryName {
  std::string_view kebab;
  std::string_view display;
};

constexpr std::array<CategoryName, 10> kNames = {{
    {"royal-flush", "Royal Flush"},
    {"straight-flush", "Straight Flush"},
    {"four-of-a-kind", "Four of a Kind"},
    {"full-house", "Full House"},
    {"flush", "Flush"},
    {"straight", "Straight"},
    {"three-of-a-kind", "Three of a Kind"},
    {"two-pair", "Two Pair"},
    {"pair", "Pair"},
    {"high-card", "High Card"},
}};

bool is_consecutive(const std::array<int, 5> &sorted) { return sorted[4] - sorted[0] == 4; }

bool is_wheel(const std::array<int, 5> &sorted, const DeckSpec &spec) {
  return spec.ace_rule == AceRule::Both && spec.values >= 6 && sorted[0] == 1 && sorted[1] == 2 &&
         sorted[2] == 3 && sorted[3] == 4 && sorted[4] == spec.values;
}

bool subset_of(std::span<const int> values, const std::array<int, 5> &run) {
  return std::all_of(values.begin(), values.end(), [&](int v) {
    return std::binary_search(run.begin(), run.end(), v);
  });
}

std::string deck_phrase(const DeckSpec &spec) {
  return std::to_string(spec.natural_count()) + "-card deck (" + std::to_string(spec.values) +
         " values, " + std::to_string(spec.suits) + " suits)";
}

std::string value_range(const DeckSpec &spec) {
  return std::to_string(spec.values - 4) + " through " + std::to_string(spec.values);
}

std::string definition(HandCategory category, const DeckSpec &spec) {
  switch (category) {
  case HandCategory::RoyalFlush:
    return "a Royal Flush is the run of the five highest values (" + value_range(spec) +
           ") with every card in one suit";
  case HandCategory::StraightFlush:
    return "a Straight Flush is a run of five consecutive values, other than the highest run, "
           "with every card in one suit";
  case HandCategory::FourOfAKind:
    return "a Four of a Kind holds four cards of one value and one further card";
  case HandCategory::FullHouse:
    return "a Full House holds three cards of one value and two cards of a second value";
  case HandCategory::Flush:
    return "a Flush holds five cards of one suit whose values do not form a run";
  case HandCategory::Straight:
    return "a Straight holds five consecutive values whose suits are not all the same";
  case HandCategory::ThreeOfAKind:
    return "a Three of a Kind holds three cards of one value and two cards of two other, "
           "different values";
  case HandCategory::TwoPair:
    return "a Two Pair holds two cards of one value, two cards of a second value and one card "
           "of a third value";
  case HandCategory::Pair:
    return "a Pair holds two cards of one value and three cards of three other, different values";
  case HandCategory::HighCard:
    return "a High Card hand has five different values that do not form a run and suits that "
           "are not all the same";
  }
  return {};
}

std::string runs_note(const DeckSpec &spec, std::size_t runs) {
  if (spec.values < 5)
    return "with only " + std::to_string(spec.values) + " values no run of five exists";
  std::string note = "there are " + std::to_string(runs) + " runs of five consecutive values";
  if (spec.ace_rule == AceRule::Both && spec.values >= 6)
    note += ", counting the low run with value " + std::to_string(spec.values) + " below 1";
  return note;
}

} // namespace

std::string_view to_string(HandCategory category) { return kNames[index_of(category)].kebab; }

std::string_view display_name(HandCategory category) {
  return kNames[index_of(category)].display;
}

std::optional<HandCategory> parse_category(std::string_view text) {
  std::string lowered(text);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (HandCategory c : kAllCategories)
    if (to_string(c) == lowered)
      return c;
  return std::nullopt;
}

std::vector<std::array<int, 5>> straight_runs(const DeckSpec &spec) {
  std::vector<std::array<int, 5>> runs;
  if (spec.values < 5)
    return runs;
  // A wheel in a 5-value deck is the same set as the only run.
  if (spec.ace_rule == AceRule::Both && spec.values >= 6)
    runs.push_back({1, 2, 3, 4, spec.values});
  for (int low = 1; low + 4 <= spec.values; ++low)
    runs.push_back({low, low + 1, low + 2, low + 3, low + 4});
  return runs;
}

Classification classify_cards(std::span<const Card, 5> cards, const DeckSpec &spec) {
  std::array<int, 5> values{};
  bool flush = true;
  for (std::size_t i = 0; i < 5; ++i) {
    if (cards[i].is_wild())
      throw UnsupportedConfiguration("classify_cards: wild card present");
    values[i] = cards[i].value;
    flush = flush && cards[i].suit == cards[0].suit;
  }
  std::sort(values.begin(), values.end());

  int groups = 0;
  int max_mult = 0;
  int paired_groups = 0;
  for (std::size_t i = 0; i < 5;) {
    std::size_t j = i;
    while (j < 5 && values[j] == values[i])
      ++j;
    const int mult = static_cast<int>(j - i);
    ++groups;
    max_mult = std::max(max_mult, mult);
    if (mult >= 2)
      ++paired_groups;
    i = j;
  }

  const bool distinct = groups == 5;
  const bool straight = distinct && (is_consecutive(values) || is_wheel(values, spec));

  if (straight && flush) {
    const bool top = is_consecutive(values) && values[4] == spec.values;
    return {top ? HandCategory::RoyalFlush : HandCategory::StraightFlush};
  }
  if (max_mult >= 4)
    return {HandCategory::FourOfAKind, max_mult == 5};
  if (max_mult == 3 && groups == 2)
    return {HandCategory::FullHouse};
  if (flush)
    return {HandCategory::Flush};
  if (straight)
    return {HandCategory::Straight};
  if (max_mult == 3)
    return {HandCategory::ThreeOfAKind};
  if (paired_groups >= 2)
    return {HandCategory::TwoPair};
  if (max_mult == 2)
    return {HandCategory::Pair};
  return {HandCategory::HighCard};
}

HandCategory classify(const Hand &hand, const DeckSpec &spec) {
  if (hand.wild_count() > 0)
    throw UnsupportedConfiguration("hand contains a wild card; use classify_with_wilds");
  for (const Card &c : hand.cards())
    check_card(c, spec);
  return classify_cards(std::span<const Card, 5>(hand.cards().data(), 5), spec).category;
}

Classification classify_with_wilds(const Hand &hand, const DeckSpec &spec) {
  for (const Card &c : hand.cards())
    check_card(c, spec);
  const int wilds = hand.wild_count();
  if (wilds == 0)
    return classify_cards(std::span<const Card, 5>(hand.cards().data(), 5), spec);

  std::vector<int> values;
  bool same_suit = true;
  int suit = 0;
  for (const Card &c : hand.cards()) {
    if (c.is_wild())
      continue;
    values.push_back(c.value);
    if (suit == 0)
      suit = c.suit;
    same_suit = same_suit && c.suit == suit;
  }
  std::sort(values.begin(), values.end());

  std::vector<int> mults;
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i])
      ++j;
    mults.push_back(static_cast<int>(j - i));
    i = j;
  }
  std::sort(mults.rbegin(), mults.rend());
  const int groups = static_cast<int>(mults.size());
  const int first = groups > 0 ? mults[0] : 0;
  const int second = groups > 1 ? mults[1] : 0;
  const bool distinct = first <= 1;

  const auto runs = straight_runs(spec);
  bool fits_run = false;
  bool fits_lower_run = false;
  bool fits_top_run = false;
  if (distinct) {
    for (std::size_t i = 0; i < runs.size(); ++i) {
      if (!subset_of(values, runs[i]))
        continue;
      fits_run = true;
      if (i + 1 == runs.size())
        fits_top_run = true;
      else
        fits_lower_run = true;
    }
  }

  const auto deficit = [](int have) { return std::max(0, 2 - have); };

  if (same_suit && fits_top_run)
    return {HandCategory::RoyalFlush};
  if (same_suit && fits_lower_run)
    return {HandCategory::StraightFlush};
  if (first + wilds >= 4)
    return {HandCategory::FourOfAKind, first + wilds >= 5};
  if (spec.values >= 2 && groups <= 2 && first <= 3 && second <= 2)
    return {HandCategory::FullHouse};
  if (same_suit)
    return {HandCategory::Flush};
  if (fits_run)
    return {HandCategory::Straight};
  if (first + wilds >= 3)
    return {HandCategory::ThreeOfAKind};
  if (spec.values >= 2 && deficit(first) + deficit(second) <= wilds)
    return {HandCategory::TwoPair};
  return {HandCategory::Pair};
}

BigInt BinomialTerm::value() const {
  const BigInt base = n < 0 ? BigInt(0) : binomial(static_cast<std::uint64_t>(n), r);
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

std::string BinomialTerm::render() const {
  std::string out = "C(" + std::to_string(n) + "," + std::to_string(r) + ")";
  if (exponent != 1)
    out += "^" + std::to_string(exponent);
  return out;
}

BigInt ChoiceFactor::value() const {
  BigInt v = ways.value();
  if (excluded)
    v -= excluded->value();
  return v;
}

std::string ChoiceFactor::render() const {
  if (!excluded)
    return ways.render();
  return "(" + ways.render() + " - " + excluded->render() + ")";
}

BigInt FormulaTerm::value() const {
  BigInt v = 1;
  for (const auto &f : factors)
    v *= f.value();
  return v;
}

std::string FormulaTerm::render() const {
  std::string out;
  for (const auto &f : factors) {
    if (!out.empty())
      out += "·";
    out += f.render();
  }
  return out;
}

BigInt CountFormula::value() const {
  BigInt v = 0;
  for (const auto &t : terms)
    v += t.value();
  return v;
}

CountFormula closed_form(HandCategory category, const DeckSpec &spec) {
  spec.validate();
  if (spec.wilds > 0)
    throw UnsupportedConfiguration(
        "closed-form counts cover wild-free decks only; use the enumeration oracle for wilds");

  const std::int64_t V = spec.values;
  const std::int64_t S = spec.suits;
  const std::int64_t runs = static_cast<std::int64_t>(straight_runs(spec).size());
  const auto term = [](std::int64_t n, std::int64_t r, int e = 1) {
    return BinomialTerm{std::max<std::int64_t>(n, 0), r, e};
  };
  const auto pick = [](std::string what, BinomialTerm ways) {
    return ChoiceFactor{std::move(what), ways, std::nullopt};
  };
  const ChoiceFactor mixed_suits{"assign each of the five cards a suit, excluding the " +
                                     std::to_string(S) + " assignments that put all five in one suit",
                                 term(S, 1, 5), term(S, 1)};

  CountFormula f{category, {}};
  switch (category) {
  case HandCategory::RoyalFlush: {
    FormulaTerm t{"royal flushes", {}};
    if (runs == 0)
      t.factors.push_back(pick("choose the top run of five values (none exists)", term(0, 1)));
    t.factors.push_back(pick("choose the suit", term(S, 1)));
    f.terms.push_back(std::move(t));
    break;
  }
  case HandCategory::StraightFlush:
    f.terms.push_back({"straight flushes",
                       {pick("choose one of the runs below the top run", term(runs - 1, 1)),
                        pick("choose the suit", term(S, 1))}});
    break;
  case HandCategory::FourOfAKind:
    f.terms.push_back({"four of one value plus one other card",
                       {pick("choose the value of the four", term(V, 1)),
                        pick("choose four of its suits", term(S, 4)),
                        pick("choose the value of the fifth card", term(V - 1, 1)),
                        pick("choose the suit of the fifth card", term(S, 1))}});
    if (S >= 5)
      f.terms.push_back({"five cards of one value",
                         {pick("choose the value", term(V, 1)),
                          pick("choose five of its suits", term(S, 5))}});
    break;
  case HandCategory::FullHouse:
    f.terms.push_back({"full houses",
                       {pick("choose the value of the triple", term(V, 1)),
                        pick("choose three of its suits", term(S, 3)),
                        pick("choose the value of the pair from the rest", term(V - 1, 1)),
                        pick("choose two of its suits", term(S, 2))}});
    break;
  case HandCategory::Flush:
    f.terms.push_back(
        {"flushes",
         {pick("choose the suit", term(S, 1)),
          ChoiceFactor{"choose five different values, excluding the " + std::to_string(runs) +
                           " runs",
                       term(V, 5), term(runs, 1)}}});
    break;
  case HandCategory::Straight:
    f.terms.push_back({"straights", {pick("choose the run of values", term(runs, 1)), mixed_suits}});
    break;
  case HandCategory::ThreeOfAKind:
    f.terms.push_back({"three of a kind",
                       {pick("choose the value of the triple", term(V, 1)),
                        pick("choose three of its suits", term(S, 3)),
                        pick("choose two other values", term(V - 1, 2)),
                        pick("choose a suit for each of those two cards", term(S, 1, 2))}});
    break;
  case HandCategory::TwoPair:
    f.terms.push_back({"two pairs",
                       {pick("choose the two paired values", term(V, 2)),
                        pick("choose two suits for each pair", term(S, 2, 2)),
                        pick("choose the value of the fifth card", term(V - 2, 1)),
                        pick("choose the suit of the fifth card", term(S, 1))}});
    break;
  case HandCategory::Pair:
    f.terms.push_back({"pairs",
                       {pick("choose the paired value", term(V, 1)),
                        pick("choose two of its suits", term(S, 2)),
                        pick("choose three other values", term(V - 1, 3)),
                        pick("choose a suit for each of those three cards", term(S, 1, 3))}});
    break;
  case HandCategory::HighCard:
    f.terms.push_back(
        {"high-card hands",
         {ChoiceFactor{"choose five different values, excluding the " + std::to_string(runs) +
                           " runs",
                       term(V, 5), term(runs, 1)},
          mixed_suits}});
    break;
  }
  return f;
}

BigInt count_category(HandCategory category, const DeckSpec &spec) {
  return closed_form(category, spec).value();
}

std::string ExactProbability::unreduced_text() const {
  return numerator.str() + "/" + denominator.str();
}

std::string ExactProbability::reduced_text() const {
  const BigRational r = reduced();
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

std::string ExactProbability::decimal_text() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", reduced().convert_to<double>());
  return buf;
}

std::string ExactProbability::render() const {
  return unreduced_text() + " = " + reduced_text() + " (approx. " + decimal_text() + ")";
}

ExactProbability probability(HandCategory category, const DeckSpec &spec) {
  BigInt count = count_category(category, spec);
  return {std::move(count), binomial(static_cast<std::uint64_t>(spec.natural_count()), 5)};
}

WinnerReport determine_winner(std::span<const PlayerEntry> entries, const DeckSpec &spec) {
  if (entries.empty())
    throw std::invalid_argument("determine_winner: no players");

  WinnerReport report;
  for (const auto &e : entries) {
    ExactProbability p = probability(e.category, spec);
    if (p.numerator == 0)
      report.impossible.push_back(e.name);
    else
      report.ranking.push_back({e.name, e.category, std::move(p)});
  }
  std::sort(report.impossible.begin(), report.impossible.end());
  std::sort(report.ranking.begin(), report.ranking.end(),
            [](const RankedEntry &a, const RankedEntry &b) {
              const BigRational pa = a.probability.reduced(), pb = b.probability.reduced();
              if (pa != pb)
                return pa < pb;
              if (a.name != b.name)
                return a.name < b.name;
              return a.category < b.category;
            });

  if (report.ranking.empty()) {
    report.outcome = WinnerReport::Outcome::NoWinner;
    return report;
  }
  const BigRational best = report.ranking.front().probability.reduced();
  for (const auto &r : report.ranking)
    if (r.probability.reduced() == best)
      report.winners.push_back(r.name);
  report.outcome =
      report.winners.size() == 1 ? WinnerReport::Outcome::Winner : WinnerReport::Outcome::Tie;
  return report;
}

std::string WinnerReport::render() const {
  std::string chain;
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    if (i > 0)
      chain += ranking[i - 1].probability.reduced() == ranking[i].probability.reduced() ? " = "
                                                                                         : " < ";
    chain += ranking[i].probability.unreduced_text();
  }
  std::string names;
  for (const auto &w : winners)
    names += (names.empty() ? "" : ", ") + w;

  std::string out;
  switch (outcome) {
  case Outcome::Winner:
    out = names + " wins (" + chain + ")";
    break;
  case Outcome::Tie:
    out = "Tie between " + names + " (" + chain + ")";
    break;
  case Outcome::NoWinner:
    out = "No winner: no player holds a hand that is possible in this deck";
    break;
  }
  if (!impossible.empty()) {
    std::string who;
    for (const auto &n : impossible)
      who += (who.empty() ? "" : ", ") + n;
    out += "; impossible in this deck (probability 0): " + who;
  }
  return out;
}

ProofDocument combinatorial_proof(HandCategory category, const DeckSpec &spec) {
  const CountFormula formula = closed_form(category, spec);
  const BigInt count = formula.value();
  const ExactProbability p = probability(category, spec);
  const std::string n = std::to_string(spec.natural_count());
  const std::string hands = p.denominator.str();
  const std::string name(display_name(category));

  ProofDocument doc;
  doc.title = name + " in a " + deck_phrase(spec);
  doc.add(StepKind::Claim, "There are exactly " + count.str() + " " + name +
                               " hands among the C(" + n + ",5) = " + hands +
                               " five-card hands, so the probability of a " + name + " is " +
                               p.render() + ".");
  doc.add(StepKind::Model, "A hand is a subset of 5 cards chosen from the " + n +
                               " cards, so there are C(" + n + ",5) = " + hands +
                               " equally likely hands. By definition, " + definition(category, spec) +
                               "; " + runs_note(spec, straight_runs(spec).size()) + ".");

  for (const auto &term : formula.terms) {
    for (const auto &factor : term.factors)
      doc.add(StepKind::Count, "To " + factor.choice + ": " + factor.render() + " = " +
                                   factor.value().str() + " ways.");
    if (formula.terms.size() > 1)
      doc.add(StepKind::Count, "These choices determine the " + term.description +
                                   " uniquely, giving " + term.render() + " = " +
                                   term.value().str() + ".");
  }
  if (formula.terms.size() == 1) {
    doc.add(StepKind::Count, "Each " + name + " arises from exactly one sequence of these choices, " +
                                 "so the count is " + formula.terms.front().render() + " = " +
                                 count.str() + ".");
  } else {
    std::string sum;
    for (const auto &term : formula.terms)
      sum += (sum.empty() ? "" : " + ") + term.value().str();
    doc.add(StepKind::Count, "The cases are disjoint, so the count is " + sum + " = " +
                                 count.str() + ".");
  }
  doc.add(StepKind::Observation, "Dividing by the number of hands gives " + count.str() +
                                     "/C(" + n + ",5) = " + p.render() + ".");
  doc.add(StepKind::Qed, "QED");
  return doc;
}

} // namespace claimproof
