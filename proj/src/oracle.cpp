#include "claimproof/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace claimproof {

namespace {

struct LocalTally {
  std::array<std::uint64_t, 10> counts{};
  std::uint64_t five = 0;

  void add(const Classification &c) {
    ++counts[index_of(c.category)];
    if (c.five_of_a_kind)
      ++five;
  }
};

// Tallies every hand whose lowest deck index is `first`.
void tally_from(std::size_t first, const std::vector<Card> &deck, int naturals,
                const DeckSpec &spec, LocalTally &out) {
  const std::size_t n = deck.size();
  std::array<Card, 5> hand{};
  hand[0] = deck[first];
  for (std::size_t b = first + 1; b < n; ++b) {
    hand[1] = deck[b];
    for (std::size_t c = b + 1; c < n; ++c) {
      hand[2] = deck[c];
      for (std::size_t d = c + 1; d < n; ++d) {
        hand[3] = deck[d];
        for (std::size_t e = d + 1; e < n; ++e) {
          hand[4] = deck[e];
          // Wilds sit at the end of the deck.
          if (static_cast<int>(e) < naturals)
            out.add(classify_cards(hand, spec));
          else
            out.add(classify_with_wilds(Hand({hand.begin(), hand.end()}), spec));
        }
      }
    }
  }
}

} // namespace

EnumerationLimitExceeded::EnumerationLimitExceeded(BigInt required, std::uint64_t cap)
    : std::runtime_error("enumeration needs " + required.str() + " hands, above the cap of " +
                         std::to_string(cap)),
      required_(std::move(required)), cap_(cap) {}

BigInt Tally::total() const {
  BigInt sum = 0;
  for (const auto &c : counts)
    sum += c;
  return sum;
}

Tally tally_all(const DeckSpec &spec, const OracleOptions &options) {
  const std::vector<Card> deck = make_deck(spec);
  const BigInt required = binomial(deck.size(), 5);
  if (required > options.cap)
    throw EnumerationLimitExceeded(required, options.cap);

  const std::size_t firsts = deck.size() - 4;
  unsigned workers = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(firsts)));

  std::vector<LocalTally> partial(workers);
  std::atomic<std::size_t> next{0};
  const auto work = [&](LocalTally &local) {
    for (std::size_t first; (first = next.fetch_add(1)) < firsts;)
      tally_from(first, deck, spec.natural_count(), spec, local);
  };

  if (workers == 1) {
    work(partial[0]);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(work, std::ref(partial[w]));
  }

  Tally tally;
  for (const auto &p : partial) {
    for (std::size_t i = 0; i < 10; ++i)
      tally.counts[i] += p.counts[i];
    tally.five_of_a_kind += p.five;
  }
  return tally;
}

bool VerificationReport::pass() const {
  return oracle_total == expected_total &&
         std::all_of(rows.begin(), rows.end(), [](const VerificationRow &r) { return r.pass(); });
}

std::string VerificationReport::render_csv() const {
  std::ostringstream out;
  out << "category,closed_form,oracle,status\n";
  BigInt closed_total = 0;
  for (const auto &r : rows) {
    closed_total += r.closed_form;
    out << to_string(r.category) << ',' << r.closed_form << ',' << r.oracle << ','
        << (r.pass() ? "PASS" : "FAIL") << '\n';
  }
  out << "total," << closed_total << ',' << oracle_total << ','
      << (closed_total == oracle_total && oracle_total == expected_total ? "PASS" : "FAIL")
      << '\n';
  return out.str();
}

std::string VerificationReport::render_text() const {
  std::ostringstream out;
  out << "Deck: " << spec.values << " values x " << spec.suits << " suits, ace "
      << (spec.ace_rule == AceRule::Both ? "both" : "high-only") << "; "
      << expected_total << " hands\n";
  for (const auto &r : rows) {
    std::string name(display_name(r.category));
    name.resize(16, ' ');
    out << "  " << name << " closed form " << r.closed_form << ", oracle " << r.oracle << "  "
        << (r.pass() ? "PASS" : "FAIL") << '\n';
  }
  out << "Overall: " << (pass() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

VerificationReport verify_closed_forms(const DeckSpec &spec, const OracleOptions &options) {
  if (spec.wilds > 0)
    throw UnsupportedConfiguration("closed forms cannot be verified for decks with wilds");
  const Tally tally = tally_all(spec, options);
  VerificationReport report{spec, {}, tally.total(),
                            binomial(static_cast<std::uint64_t>(spec.size()), 5)};
  for (HandCategory c : kAllCategories)
    report.rows[index_of(c)] = {c, count_category(c, spec), tally[c]};
  return report;
}

} // namespace claimproof
