#include "claimproof/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>

#include <CLI11.hpp>

#include "claimproof/deck.hpp"
#include "claimproof/graphs.hpp"
#include "claimproof/hands.hpp"
#include "claimproof/oracle.hpp"
#include "claimproof/rubric.hpp"

namespace claimproof::cli {

namespace {

struct DeckFlags {
  int values = 13;
  int suits = 4;
  int wilds = 0;
  std::string ace = "both";
  unsigned threads = 1;

  void attach(CLI::App *cmd, bool with_wilds = true) {
    cmd->add_option("--values", values, "Number of card values")->check(CLI::PositiveNumber);
    cmd->add_option("--suits", suits, "Number of suits")->check(CLI::PositiveNumber);
    if (with_wilds)
      cmd->add_option("--wilds", wilds, "Number of wild cards")->check(CLI::NonNegativeNumber);
    cmd->add_option("--ace", ace, "Ace rule: both (wheel counts) or high")
        ->check(CLI::IsMember({"both", "high"}));
    cmd->add_option("--threads", threads, "Enumeration threads (0 = all cores)");
  }

  DeckSpec spec() const {
    DeckSpec s{values, suits, wilds, ace == "high" ? AceRule::HighOnly : AceRule::Both};
    s.validate();
    return s;
  }
};

std::vector<HandCategory> selected_categories(const std::string &name, bool all) {
  if (all || name.empty())
    return {kAllCategories.begin(), kAllCategories.end()};
  const auto c = parse_category(name);
  if (!c)
    throw CLI::ValidationError("CATEGORY", "unknown category '" + name + "'");
  return {*c};
}

HandCategory require_category(const std::string &name) {
  const auto c = parse_category(name);
  if (!c)
    throw CLI::ValidationError("CATEGORY", "unknown category '" + name + "'");
  return *c;
}

int poker_counts(const DeckFlags &flags, const std::string &category, bool all, bool as_prob,
                 std::ostream &out) {
  const DeckSpec spec = flags.spec();
  const auto categories = selected_categories(category, all);

  std::optional<Tally> tally;
  if (spec.wilds > 0)
    tally = tally_all(spec, {.threads = flags.threads});
  const BigInt hands = binomial(static_cast<std::uint64_t>(spec.size()), 5);

  if (tally)
    out << "# counts by exhaustive enumeration (closed forms cover wild-free decks only)\n";
  for (HandCategory c : categories) {
    const BigInt count = tally ? (*tally)[c] : count_category(c, spec);
    out << to_string(c) << ": ";
    if (as_prob)
      out << ExactProbability{count, hands}.render();
    else
      out << count;
    out << '\n';
  }
  if (tally && tally->five_of_a_kind > 0)
    out << "# four-of-a-kind includes " << tally->five_of_a_kind << " five-of-a-kind hands\n";
  if (categories.size() > 1)
    out << "total: " << hands << '\n';
  return kOk;
}

int poker_winner(const DeckFlags &flags, const std::vector<std::string> &players,
                 std::ostream &out) {
  std::vector<PlayerEntry> entries;
  for (const auto &p : players) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0)
      throw CLI::ValidationError("NAME=CATEGORY", "expected NAME=CATEGORY, got '" + p + "'");
    entries.push_back({p.substr(0, eq), require_category(p.substr(eq + 1))});
  }
  const WinnerReport report = determine_winner(entries, flags.spec());
  out << report.render() << '\n';
  return report.outcome == WinnerReport::Outcome::NoWinner ? kNegative : kOk;
}

int poker_classify(const DeckFlags &flags, const std::vector<std::string> &cards,
                   std::ostream &out) {
  const DeckSpec spec = flags.spec();
  std::string text;
  for (const auto &c : cards)
    text += c + ' ';
  const Hand hand = parse_hand(text, spec);
  const Classification result = classify_with_wilds(hand, spec);
  out << render_hand(hand, spec) << ": " << to_string(result.category);
  if (result.five_of_a_kind)
    out << " (five of a kind)";
  out << '\n';
  return kOk;
}

int graph_command(const std::string &which, const std::string &path, const std::string &words,
                  std::string setting, bool steps, std::ostream &out) {
  const Multigraph g = load_graph(path);
  if (which == "analyze") {
    const EulerianStatus status = eulerian_status(g);
    out << status.describe(g) << '\n';
    out << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    const auto deg = degrees(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      out << "  " << g.name(v) << ": degree " << deg[v] << (deg[v] % 2 ? " (odd)" : "") << '\n';
    return kOk;
  }
  if (which == "trail") {
    const TrailSearch search = find_trail(g);
    out << search.status.describe(g) << '\n';
    if (!search.trail)
      return kNegative;
    out << search.trail->render(g) << '\n';
    return kOk;
  }

  const EulerianStatus status = eulerian_status(g);
  if (status.odd.size() <= 2) {
    out << status.describe(g) << "; no parity obstruction, so no impossibility proof\n";
    return kNegative;
  }
  if (setting.empty())
    setting = std::filesystem::path(path).stem().string();
  const ProofVocabulary vocab = words == "floor-plan" ? ProofVocabulary::floor_plan(setting)
                                                      : ProofVocabulary::bridges(setting);
  const ProofDocument doc = impossibility_proof(g, vocab);
  out << (steps ? doc.render_steps() : doc.render_text());
  return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact poker-hand counting, Eulerian trail proofs and rubric scoring",
               "claimproof"};
  app.require_subcommand(1);

  auto *poker = app.add_subcommand("poker", "Poker hand combinatorics")->require_subcommand(1);
  DeckFlags deck;

  std::string category;
  bool all = false;
  auto *count = poker->add_subcommand("count", "Exact number of hands per category");
  auto *prob = poker->add_subcommand("prob", "Exact probability per category");
  for (auto *cmd : {count, prob}) {
    deck.attach(cmd);
    cmd->add_option("CATEGORY", category, "Category in kebab-case, e.g. full-house");
    cmd->add_flag("--all", all, "All ten categories (default)");
  }

  std::vector<std::string> players;
  auto *winner = poker->add_subcommand("winner", "Lowest-probability hand wins");
  deck.attach(winner, false);
  winner->add_option("PLAYERS", players, "NAME=CATEGORY entries")->required();

  auto *verify = poker->add_subcommand("verify", "Check closed forms against enumeration");
  deck.attach(verify, false);

  std::string proof_category;
  bool proof_steps = false;
  auto *pproof = poker->add_subcommand("proof", "Claim-Proof counting argument for a category");
  deck.attach(pproof, false);
  pproof->add_option("CATEGORY", proof_category)->required();
  pproof->add_flag("--steps", proof_steps, "Print the structured step list");

  std::vector<std::string> cards;
  auto *classify_cmd = poker->add_subcommand("classify", "Classify a 5-card hand");
  deck.attach(classify_cmd);
  classify_cmd->add_option("CARDS", cards, "Five card tokens, e.g. 10S JS QS KS W1")->required();

  auto *graph = app.add_subcommand("graph", "Eulerian trail analysis")->require_subcommand(1);
  std::string graph_file;
  std::string words = "bridges";
  std::string setting;
  bool graph_steps = false;
  auto *analyze = graph->add_subcommand("analyze", "Degree parity and trail status");
  auto *trail = graph->add_subcommand("trail", "Construct a trail through every edge");
  auto *gproof = graph->add_subcommand("proof", "Claim-Proof that no such trail exists");
  for (auto *cmd : {analyze, trail, gproof})
    cmd->add_option("FILE", graph_file, "Graph file")->required();
  gproof->add_option("--words", words, "Vocabulary: bridges or floor-plan")
      ->check(CLI::IsMember({"bridges", "floor-plan"}));
  gproof->add_option("--setting", setting, "Name of the place being modelled");
  gproof->add_flag("--steps", graph_steps, "Print the structured step list");

  auto *rubric = app.add_subcommand("rubric", "Rubric scoring")->require_subcommand(1);
  std::string rubric_file, marks_file;
  auto *rscore = rubric->add_subcommand("score", "Score a mark sheet against a rubric");
  rscore->add_option("RUBRIC_FILE", rubric_file)->required();
  rscore->add_option("MARKS_FILE", marks_file)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (count->parsed() || prob->parsed())
      return poker_counts(deck, category, all, prob->parsed(), out);
    if (winner->parsed())
      return poker_winner(deck, players, out);
    if (verify->parsed()) {
      const VerificationReport report = verify_closed_forms(deck.spec(), {.threads = deck.threads});
      out << report.render_csv() << "Overall: " << (report.pass() ? "PASS" : "FAIL") << '\n';
      return report.pass() ? kOk : kNegative;
    }
    if (pproof->parsed()) {
      const ProofDocument doc = combinatorial_proof(require_category(proof_category), deck.spec());
      out << (proof_steps ? doc.render_steps() : doc.render_text());
      return kOk;
    }
    if (classify_cmd->parsed())
      return poker_classify(deck, cards, out);
    if (analyze->parsed() || trail->parsed() || gproof->parsed()) {
      const std::string which = analyze->parsed() ? "analyze" : trail->parsed() ? "trail" : "proof";
      return graph_command(which, graph_file, words, setting, graph_steps, out);
    }
    if (rscore->parsed()) {
      const ScoreReport report = score(load_rubric_file(rubric_file), load_marks_file(marks_file));
      out << report.render();
      return kOk;
    }
  } catch (const CLI::Error &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

} // namespace claimproof::cli
