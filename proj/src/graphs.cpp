#include "claimproof/graphs.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace claimproof {

namespace {

bool valid_name(std::string_view name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

std::string count_phrase(std::size_t n, std::string_view singular, std::string_view plural) {
  return std::to_string(n) + " " + std::string(n == 1 ? singular : plural);
}

std::string join_names(const std::vector<std::string> &parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0)
      out += (i + 1 == parts.size()) ? (parts.size() > 2 ? ", and " : " and ") : ", ";
    out += parts[i];
  }
  return out;
}

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x)
      x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
  std::vector<std::size_t> parent_;
};

} // namespace

GraphParseError::GraphParseError(std::size_t line, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

VertexId Multigraph::add_vertex(std::string name) {
  if (!valid_name(name))
    throw std::invalid_argument("invalid vertex name '" + name + "'");
  if (index_.contains(name))
    throw std::invalid_argument("vertex '" + name + "' declared twice");
  const VertexId id = names_.size();
  index_.emplace(name, id);
  names_.push_back(std::move(name));
  return id;
}

EdgeId Multigraph::add_edge(VertexId a, VertexId b, std::string label) {
  if (a >= names_.size() || b >= names_.size())
    throw std::out_of_range("edge endpoint is not a vertex of the graph");
  edges_.push_back({a, b, std::move(label)});
  return edges_.size() - 1;
}

EdgeId Multigraph::add_edge(std::string_view a, std::string_view b, std::string label) {
  const auto resolve = [this](std::string_view name) {
    if (auto id = find(name))
      return *id;
    if (name == kOutside)
      return add_vertex(std::string(kOutside));
    throw std::invalid_argument("edge references undeclared vertex '" + std::string(name) + "'");
  };
  const VertexId va = resolve(a);
  const VertexId vb = resolve(b);
  return add_edge(va, vb, std::move(label));
}

std::optional<VertexId> Multigraph::find(std::string_view name) const {
  if (auto it = index_.find(name); it != index_.end())
    return it->second;
  return std::nullopt;
}

Multigraph parse_graph(std::string_view text) {
  Multigraph g;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;)
      tokens.push_back(std::move(w));
    if (tokens.empty())
      continue;

    try {
      if (tokens[0] == "vertex") {
        if (tokens.size() != 2)
          throw GraphParseError(line_no, "expected 'vertex <name>'");
        g.add_vertex(tokens[1]);
      } else if (tokens[0] == "edge") {
        if (tokens.size() < 3)
          throw GraphParseError(line_no, "expected 'edge <name1> <name2> [label]'");
        std::string label;
        for (std::size_t i = 3; i < tokens.size(); ++i)
          label += (label.empty() ? "" : " ") + tokens[i];
        g.add_edge(tokens[1], tokens[2], std::move(label));
      } else {
        throw GraphParseError(line_no, "unknown directive '" + tokens[0] + "'");
      }
    } catch (const GraphParseError &) {
      throw;
    } catch (const std::exception &e) {
      throw GraphParseError(line_no, e.what());
    }
  }
  return g;
}

Multigraph load_graph(const std::string &path) {
  std::ifstream file(path);
  if (!file)
    throw std::runtime_error("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return parse_graph(buf.str());
}

std::vector<std::size_t> degrees(const Multigraph &g) {
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  for (const Edge &e : g.edges()) {
    ++deg[e.a];
    ++deg[e.b];
  }
  return deg;
}

std::map<std::string, std::size_t> degree_map(const Multigraph &g) {
  const auto deg = degrees(g);
  std::map<std::string, std::size_t> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    out.emplace(g.name(v), deg[v]);
  return out;
}

std::vector<VertexId> odd_vertices(const Multigraph &g) {
  const auto deg = degrees(g);
  std::vector<VertexId> odd;
  for (VertexId v = 0; v < deg.size(); ++v)
    if (deg[v] % 2 == 1)
      odd.push_back(v);
  return odd;
}

std::string_view to_string(EulerianKind kind) {
  switch (kind) {
  case EulerianKind::Circuit: return "Circuit";
  case EulerianKind::OpenTrail: return "OpenTrail";
  case EulerianKind::NoTrail: return "NoTrail";
  case EulerianKind::Disconnected: return "Disconnected";
  }
  return "unknown";
}

std::string EulerianStatus::describe(const Multigraph &g) const {
  std::string out(to_string(kind));
  switch (kind) {
  case EulerianKind::Circuit:
    return out + ": every vertex has even degree";
  case EulerianKind::OpenTrail:
    return out + ": 2 vertices of odd degree (" + g.name(odd[0]) + ", " + g.name(odd[1]) + ")";
  case EulerianKind::NoTrail:
    return out + ": " + std::to_string(odd.size()) + " vertices of odd degree";
  case EulerianKind::Disconnected:
    return out + ": edges lie in " + std::to_string(components) + " components";
  }
  return out;
}

EulerianStatus eulerian_status(const Multigraph &g) {
  if (g.edge_count() == 0)
    throw DegenerateGraph("graph has no edges");

  DisjointSets sets(g.vertex_count());
  std::vector<bool> touched(g.vertex_count(), false);
  for (const Edge &e : g.edges()) {
    sets.unite(e.a, e.b);
    touched[e.a] = touched[e.b] = true;
  }
  std::vector<std::size_t> roots;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (touched[v])
      roots.push_back(sets.find(v));
  std::sort(roots.begin(), roots.end());
  const auto components =
      static_cast<std::size_t>(std::unique(roots.begin(), roots.end()) - roots.begin());

  EulerianStatus status{EulerianKind::Circuit, odd_vertices(g), components};
  if (components > 1)
    status.kind = EulerianKind::Disconnected;
  else if (status.odd.empty())
    status.kind = EulerianKind::Circuit;
  else if (status.odd.size() == 2)
    status.kind = EulerianKind::OpenTrail;
  else
    status.kind = EulerianKind::NoTrail;
  return status;
}

TrailSearch find_trail(const Multigraph &g) {
  TrailSearch result{eulerian_status(g), std::nullopt};
  if (result.status.kind != EulerianKind::Circuit && result.status.kind != EulerianKind::OpenTrail)
    return result;

  // Incidence lists in edge-id order; a loop appears twice.
  std::vector<std::vector<std::pair<EdgeId, VertexId>>> incident(g.vertex_count());
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge &e = g.edges()[id];
    incident[e.a].emplace_back(id, e.b);
    incident[e.b].emplace_back(id, e.a);
  }

  VertexId start = g.edges().front().a;
  if (!result.status.odd.empty()) {
    start = result.status.odd.front();
  } else {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (!incident[v].empty()) {
        start = v;
        break;
      }
  }

  std::vector<bool> used(g.edge_count(), false);
  std::vector<std::size_t> cursor(g.vertex_count(), 0);
  struct Frame {
    VertexId vertex;
    EdgeId via;
  };
  constexpr EdgeId kNone = static_cast<EdgeId>(-1);
  std::vector<Frame> stack{{start, kNone}};
  std::vector<Frame> circuit;
  while (!stack.empty()) {
    const VertexId v = stack.back().vertex;
    auto &list = incident[v];
    while (cursor[v] < list.size() && used[list[cursor[v]].first])
      ++cursor[v];
    if (cursor[v] == list.size()) {
      circuit.push_back(stack.back());
      stack.pop_back();
      continue;
    }
    const auto [edge, other] = list[cursor[v]];
    used[edge] = true;
    stack.push_back({other, edge});
  }
  std::reverse(circuit.begin(), circuit.end());

  Trail trail{circuit.front().vertex, circuit.back().vertex, {}};
  for (std::size_t i = 1; i < circuit.size(); ++i)
    trail.steps.push_back({circuit[i].via, circuit[i - 1].vertex, circuit[i].vertex});
  result.trail = std::move(trail);
  return result;
}

bool is_eulerian_trail(const Multigraph &g, const Trail &trail) {
  if (trail.steps.size() != g.edge_count())
    return false;
  std::vector<bool> seen(g.edge_count(), false);
  VertexId at = trail.start;
  for (const TrailStep &s : trail.steps) {
    if (s.edge >= g.edge_count() || seen[s.edge] || s.from != at)
      return false;
    const Edge &e = g.edges()[s.edge];
    if (!((e.a == s.from && e.b == s.to) || (e.b == s.from && e.a == s.to)))
      return false;
    seen[s.edge] = true;
    at = s.to;
  }
  return at == trail.end;
}

std::string Trail::render(const Multigraph &g) const {
  std::string out = g.name(start);
  for (const TrailStep &s : steps) {
    const std::string &label = g.edges()[s.edge].label;
    out += " --[" + (label.empty() ? "e" + std::to_string(s.edge) : label) + "]--> " +
           g.name(s.to);
  }
  return out;
}

ProofDocument impossibility_proof(const Multigraph &g, const ProofVocabulary &words) {
  const EulerianStatus status = eulerian_status(g);
  if (status.odd.size() <= 2)
    throw std::logic_error("impossibility_proof: graph has at most two odd vertices, so the parity "
                           "argument does not apply (status " +
                           std::string(to_string(status.kind)) + ")");

  const auto deg = degrees(g);
  std::vector<std::string> odd_names;
  for (VertexId v : status.odd)
    odd_names.push_back(g.name(v) + " (" + std::to_string(deg[v]) + ")");
  const std::string odd_count = std::to_string(status.odd.size());

  ProofDocument doc;
  doc.title = "No route through " + words.setting + " uses every " + words.edge_noun +
              " exactly once";
  doc.add(StepKind::Claim, "There is no route through " + words.setting +
                               " that passes through every " + words.edge_noun +
                               " exactly once.");
  doc.add(StepKind::Model, "We represent " + words.setting +
                               " by a graph: draw a vertex for each " + words.vertex_noun +
                               " and an edge for each " + words.edge_noun +
                               ", joining the two vertices it connects. A trail is a route in "
                               "the graph that uses each edge at most once.");
  doc.add(StepKind::Count, "Call this graph G. Hence, G consists of " +
                               count_phrase(g.vertex_count(), "vertex", "vertices") + " and " +
                               count_phrase(g.edge_count(), "edge", "edges") + ".");
  doc.add(StepKind::Observation, "A route through every " + words.edge_noun +
                                     " exactly once is a trail in G containing every edge of G. "
                                     "It now suffices to prove that there is no trail in G that "
                                     "contains every edge of G.");
  doc.add(StepKind::Lemma,
          "Except possibly for its first and last vertices, every vertex of a trail T touches an "
          "even number of edges of T. This is because each time T passes through a middle "
          "vertex, it enters by one edge and leaves by another.");
  doc.add(StepKind::Observation,
          "However, the " + odd_count + " " + words.vertex_plural + " " + join_names(odd_names) +
              " each touch an odd number of edges of G, so G has " + odd_count +
              " vertices of odd degree.");
  doc.add(StepKind::Contradiction,
          "Hence, if a trail T contained every edge of G, these " + odd_count +
              " vertices would each touch an odd number of edges of T, so each would have to be "
              "the first or last vertex of T. A trail has at most two end vertices and " +
              odd_count + " > 2, so no trail in G contains every edge of G. As a result, no "
              "route through " + words.setting + " passes through every " + words.edge_noun +
              " exactly once.");
  doc.add(StepKind::Qed, "QED");
  return doc;
}

} // namespace claimproof
