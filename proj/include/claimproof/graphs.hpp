#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "claimproof/proof.hpp"

namespace claimproof {

class GraphParseError : public std::runtime_error {
public:
  GraphParseError(std::size_t line, const std::string &message);
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Raised for edgeless graphs, where trail questions are vacuous.
class DegenerateGraph : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

using VertexId = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  VertexId a;
  VertexId b;
  std::string label;

  bool is_loop() const { return a == b; }
};

/// Undirected multigraph; parallel edges and self-loops allowed. Edge ids are
/// insertion indices.
class Multigraph {
public:
  static constexpr std::string_view kOutside = "outside";

  VertexId add_vertex(std::string name);
  EdgeId add_edge(VertexId a, VertexId b, std::string label = {});
  /// Adds by name; the vertex `outside` is created on first use.
  EdgeId add_edge(std::string_view a, std::string_view b, std::string label = {});

  std::optional<VertexId> find(std::string_view name) const;
  const std::string &name(VertexId v) const { return names_.at(v); }

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string> &vertex_names() const { return names_; }
  const std::vector<Edge> &edges() const { return edges_; }

private:
  std::vector<std::string> names_;
  std::map<std::string, VertexId, std::less<>> index_;
  std::vector<Edge> edges_;
};

/// Line format: `vertex <name>` and `edge <name1> <name2> [label...]`; `#` starts a comment.
Multigraph parse_graph(std::string_view text);
Multigraph load_graph(const std::string &path);

/// Degree per vertex in declaration order; a self-loop adds 2.
std::vector<std::size_t> degrees(const Multigraph &g);
std::map<std::string, std::size_t> degree_map(const Multigraph &g);
std::vector<VertexId> odd_vertices(const Multigraph &g);

enum class EulerianKind { Circuit, OpenTrail, NoTrail, Disconnected };

std::string_view to_string(EulerianKind kind);

struct EulerianStatus {
  EulerianKind kind;
  std::vector<VertexId> odd; // odd-degree vertices, ascending
  std::size_t components = 1; // among edge-incident vertices

  /// e.g. "NoTrail: 4 vertices of odd degree"
  std::string describe(const Multigraph &g) const;
};

/// Throws DegenerateGraph for an edgeless graph.
EulerianStatus eulerian_status(const Multigraph &g);

struct TrailStep {
  EdgeId edge;
  VertexId from;
  VertexId to;
};

struct Trail {
  VertexId start;
  VertexId end;
  std::vector<TrailStep> steps;

  bool closed() const { return start == end; }
  std::string render(const Multigraph &g) const;
};

struct TrailSearch {
  EulerianStatus status;
  std::optional<Trail> trail; // present iff status is Circuit or OpenTrail
};

/// Hierholzer construction; deterministic (lowest edge id first).
TrailSearch find_trail(const Multigraph &g);

/// Checks that `trail` uses every edge of `g` exactly once and is vertex-consecutive.
bool is_eulerian_trail(const Multigraph &g, const Trail &trail);

/// Words used in proofs for the things the graph models.
struct ProofVocabulary {
  std::string setting = "the map";
  std::string vertex_noun = "land mass";
  std::string vertex_plural = "land masses";
  std::string edge_noun = "bridge";
  std::string edge_plural = "bridges";

  static ProofVocabulary bridges(std::string setting) {
    return {std::move(setting), "land mass", "land masses", "bridge", "bridges"};
  }
  static ProofVocabulary floor_plan(std::string setting) {
    return {std::move(setting), "room", "rooms", "doorway or window", "doorways and windows"};
  }
};

/// Claim-Proof that no route uses every edge exactly once. Throws std::logic_error
/// unless the status is NoTrail.
ProofDocument impossibility_proof(const Multigraph &g, const ProofVocabulary &words = {});

} // namespace claimproof
