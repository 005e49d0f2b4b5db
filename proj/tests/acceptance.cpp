// One line per criterion: "[PASS] n description" or "[FAIL] n description: detail".
// Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "claimproof/graphs.hpp"
#include "claimproof/hands.hpp"
#include "claimproof/oracle.hpp"
#include "claimproof/rubric.hpp"
#include "support/oracles.hpp"

using namespace claimproof;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string name(HandCategory c) { return std::string(to_string(c)); }

// Empty string means pass.
using Check = std::function<std::string()>;

Tally g_standard;

std::string standard_partition() {
  const auto start = Clock::now();
  g_standard = tally_all(DeckSpec::standard(), {.threads = 1});
  const double elapsed = seconds_since(start);
  const BigInt hands = testing::factorial_binomial(52, 5);
  if (hands != 2598960)
    return "C(52,5) oracle gives " + hands.str();
  if (g_standard.total() != hands)
    return "tally sums to " + g_standard.total().str();
  for (HandCategory c : kAllCategories) {
    const BigInt closed = count_category(c, DeckSpec::standard());
    if (closed != g_standard[c])
      return name(c) + ": closed form " + closed.str() + ", oracle " + g_standard[c].str();
  }
  if (elapsed >= 30.0)
    return "took " + std::to_string(elapsed) + " s single-threaded";
  return {};
}

std::string variant_sweep() {
  int specs = 0;
  for (int v = 5; v <= 9; ++v)
    for (int s = 2; s <= 4; ++s)
      for (AceRule rule : {AceRule::Both, AceRule::HighOnly}) {
        const VerificationReport r = verify_closed_forms({v, s, 0, rule}, {.threads = 0});
        ++specs;
        if (!r.pass())
          return "V=" + std::to_string(v) + " S=" + std::to_string(s) + "\n" + r.render_csv();
      }
  return specs == 30 ? std::string{} : "swept " + std::to_string(specs) + " specs";
}

std::string winner_scenario() {
  const std::vector<HandCategory> allowed = {
      HandCategory::FullHouse,    HandCategory::Flush,   HandCategory::Straight,
      HandCategory::ThreeOfAKind, HandCategory::TwoPair, HandCategory::Pair,
      HandCategory::HighCard};
  const std::vector<std::string> names = {"Bond", "Rogers", "Ryan"};
  int scenarios = 0;
  for (HandCategory a : allowed)
    for (HandCategory b : allowed)
      for (HandCategory c : allowed) {
        if (a == b || b == c || a == c)
          continue;
        const std::vector<PlayerEntry> players = {{names[0], a}, {names[1], b}, {names[2], c}};
        std::vector<std::pair<BigInt, std::string>> sorted;
        for (const auto &p : players)
          sorted.emplace_back(g_standard[p.category], p.name);
        std::sort(sorted.begin(), sorted.end());
        const WinnerReport w = determine_winner(players, DeckSpec::standard());
        ++scenarios;
        if (w.outcome != WinnerReport::Outcome::Winner || w.winners.size() != 1 ||
            w.winners[0] != sorted[0].second)
          return name(a) + "/" + name(b) + "/" + name(c) + ": " + w.render();
      }
  return scenarios == 210 ? std::string{} : "ran " + std::to_string(scenarios) + " scenarios";
}

// Connectivity over vertices that carry at least one edge, by breadth-first search.
bool edge_connected(const Multigraph &g) {
  const auto &edges = g.edges();
  std::vector<std::vector<VertexId>> adj(g.vertex_count());
  for (const auto &e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> queue = {edges.front().a};
  seen[edges.front().a] = true;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (VertexId n : adj[queue[i]])
      if (!seen[n]) {
        seen[n] = true;
        queue.push_back(n);
      }
  return std::all_of(edges.begin(), edges.end(), [&](const Edge &e) { return seen[e.a]; });
}

std::string euler_equivalence() {
  const auto start = Clock::now();
  std::mt19937_64 rng(4);
  int backtracked = 0;
  for (int i = 0; i < 1500; ++i) {
    const Multigraph g = i % 2 ? testing::random_multigraph(rng, 8, 16)
                               : testing::random_connected_multigraph(rng, 8, 16);
    std::size_t odd = 0;
    for (std::size_t d : degrees(g))
      odd += d % 2;
    const bool expect = edge_connected(g) && (odd == 0 || odd == 2);
    const TrailSearch s = find_trail(g);
    if (s.trail.has_value() != expect)
      return "graph " + std::to_string(i) + ": find_trail disagrees with degree test";
    if (s.trail && !is_eulerian_trail(g, *s.trail))
      return "graph " + std::to_string(i) + ": invalid trail";
    if (g.edge_count() <= 10) {
      ++backtracked;
      if (testing::has_euler_trail_backtracking(g) != expect)
        return "graph " + std::to_string(i) + ": backtracking disagrees";
    }
  }
  const double elapsed = seconds_since(start);
  if (backtracked < 300)
    return "only " + std::to_string(backtracked) + " backtracking cross-checks";
  if (elapsed >= 60.0)
    return "took " + std::to_string(elapsed) + " s";
  return {};
}

std::string konigsberg() {
  const Multigraph g = load_graph(CLAIMPROOF_DATA_DIR "/konigsberg.graph");
  const EulerianStatus st = eulerian_status(g);
  if (st.kind != EulerianKind::NoTrail || st.odd.size() != 4)
    return st.describe(g);
  const ProofDocument doc = impossibility_proof(g, ProofVocabulary::bridges("Königsberg"));
  const std::vector<StepKind> expected = {
      StepKind::Claim,       StepKind::Model, StepKind::Count,         StepKind::Observation,
      StepKind::Lemma,       StepKind::Observation, StepKind::Contradiction, StepKind::Qed};
  if (doc.kinds() != expected)
    return "step order:\n" + doc.render_steps();
  if (doc.steps[2].text.find("4 vertices and 7 edges") == std::string::npos)
    return "count step: " + doc.steps[2].text;
  return {};
}

std::string cat_and_mouse() {
  const Multigraph g = load_graph(CLAIMPROOF_DATA_DIR "/cat_and_mouse.graph");
  const EulerianStatus st = eulerian_status(g);
  if (st.kind != EulerianKind::NoTrail)
    return st.describe(g);
  const ProofDocument doc = impossibility_proof(g, ProofVocabulary::floor_plan("cat_and_mouse"));
  const std::string odd_step = doc.steps[5].text;
  std::size_t cited = 0;
  for (VertexId v : st.odd)
    if (odd_step.find(g.name(v) + " (") != std::string::npos)
      ++cited;
  const std::string count = std::to_string(st.odd.size()) + " rooms";
  if (cited != st.odd.size() || cited <= 2 || odd_step.find(count) == std::string::npos)
    return "odd list step: " + odd_step;
  return {};
}

std::string rubric() {
  const PointRubric r = std::get<PointRubric>(load_rubric_file(CLAIMPROOF_DATA_DIR "/poker.rubric"));
  if (r.maximum != 100)
    return "maximum " + std::to_string(r.maximum);
  MarkSheet full, zero;
  for (const auto &s : r.sections)
    for (const auto &c : s.criteria) {
      full.awards.push_back({c.description, c.points});
      zero.awards.push_back({c.description, HalfPoints{}});
    }
  if (score(r, full).total != HalfPoints::whole(100))
    return "full marks give " + score(r, full).total.str();
  if (score(r, zero).total != HalfPoints{})
    return "zero marks give " + score(r, zero).total.str();

  int dropped = 0;
  std::size_t i = 0;
  for (const auto &s : r.sections)
    for (const auto &c : s.criteria) {
      const std::size_t at = i++;
      if (s.name != "Main Results")
        continue;
      if (c.multiplier != 5)
        return "Main Results criterion with multiplier " + std::to_string(c.multiplier);
      MarkSheet m = full;
      m.awards[at].value = c.points - HalfPoints::whole(1);
      if (score(r, m).total != HalfPoints::whole(95))
        return "dropping a point on \"" + c.description + "\" gives " + score(r, m).total.str();
      ++dropped;
    }
  return dropped > 0 ? std::string{} : "no Main Results criteria";
}

std::string wild_cards() {
  const DeckSpec spec{13, 4, 1};
  const std::vector<Card> deck = make_deck(spec);
  std::vector<Card> naturals(deck.begin(), deck.end() - 1);
  std::mt19937_64 rng(500);
  for (int i = 0; i < 500; ++i) {
    std::vector<Card> cards = testing::random_hand(rng, naturals).cards();
    cards.back() = Card::joker(1);
    const Hand hand(cards);
    const HandCategory got = classify_with_wilds(hand, spec).category;
    const HandCategory want = testing::brute_force_wild_best(hand, spec);
    if (got != want)
      return render_hand(hand, spec) + ": " + name(got) + " vs " + name(want);
  }
  return {};
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, Check>> criteria = {
      {"standard deck: oracle tally equals closed forms, sums to 2598960, < 30 s", standard_partition},
      {"variant sweep: V 5..9, S 2..4, both ace rules", variant_sweep},
      {"winner: all 210 ordered triples of distinct categories", winner_scenario},
      {"Euler: 1500 random multigraphs vs degree test and backtracking, < 60 s", euler_equivalence},
      {"Königsberg: NoTrail, 4 odd vertices, proof step order", konigsberg},
      {"cat and mouse: NoTrail, proof cites > 2 odd rooms", cat_and_mouse},
      {"rubric: max 100, full 100, zero 0, x5 drop costs 5", rubric},
      {"wild cards: 500 one-joker hands vs brute-force substitution", wild_cards},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    std::string detail;
    try {
      detail = criteria[i].second();
    } catch (const std::exception &e) {
      detail = std::string("exception: ") + e.what();
    }
    std::ostringstream line;
    line << (detail.empty() ? "[PASS] " : "[FAIL] ") << i + 1 << ' ' << criteria[i].first;
    line.precision(2);
    line << std::fixed << " (" << seconds_since(start) << " s)";
    if (!detail.empty()) {
      line << ": " << detail;
      ++failures;
    }
    std::cout << line.str() << '\n';
  }
  return failures;
}
