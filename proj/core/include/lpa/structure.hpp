#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "lpa/vertex_set.hpp"

namespace lpa {

using EdgeId = std::uint32_t;

enum class Kind { Graph, Ultragraph };

struct Edge {
  std::string name;
  Vertex source = 0;
  VertexSet range;
};

// A finite path: base vertex plus composable edges in order.
struct Path {
  Vertex start = 0;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  bool operator==(const Path&) const = default;
  auto operator<=>(const Path&) const = default;
};

struct Violation {
  std::string where;
  std::string message;
  bool operator==(const Violation&) const = default;
};

// A graph or ultragraph. Graph edges have singleton ranges.
// Vertices flagged infinite emit undeclared edges; frontier vertices come
// from truncation. Neither carries the Cuntz-Krieger relation.
class Structure {
 public:
  Structure() = default;
  // Finite universe over the listed vertex names, in index order.
  static Structure finite(std::string name, Kind kind, const std::vector<std::string>& vertices);
  // Universe of naturals; named vertices are aliases for indices.
  static Structure nat(std::string name, Kind kind);

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  Kind kind() const { return kind_; }
  const Universe& universe() const { return universe_; }
  bool is_nat() const { return universe_.nat; }

  // Nat mode only: names an index (defaults to the next free index).
  Vertex add_vertex(const std::string& name, std::optional<Vertex> index = std::nullopt);
  EdgeId add_edge(const std::string& name, Vertex source, VertexSet range);
  EdgeId add_graph_edge(const std::string& name, Vertex source, Vertex target);
  void set_range(EdgeId e, VertexSet range);
  void flag_infinite(Vertex v) { infinite_.insert(v); }
  void flag_frontier(Vertex v) { frontier_.insert(v); }
  void set_sigma(Vertex v, std::string word) { sigma_[v] = std::move(word); }

  std::optional<Vertex> find_vertex(const std::string& name) const;
  Vertex vertex(const std::string& name) const;
  std::optional<EdgeId> find_edge(const std::string& name) const;
  EdgeId edge_id(const std::string& name) const;
  // Display name; anonymous Nat indices print as _N.
  std::string vertex_name(Vertex v) const;
  bool is_named(Vertex v) const { return names_.count(v) != 0; }
  const std::map<Vertex, std::string>& named_vertices() const { return names_; }
  std::size_t vertex_count() const;  // finite universes only
  std::vector<Vertex> finite_vertices() const;

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<EdgeId>& out_edges(Vertex v) const;
  std::vector<Vertex> sources() const;
  // Graph kind: the unique target vertex.
  Vertex target(EdgeId e) const { return edges_.at(e).range.items().front(); }

  const std::set<Vertex>& infinite_flags() const { return infinite_; }
  const std::set<Vertex>& frontier_flags() const { return frontier_; }
  bool is_infinite_flagged(Vertex v) const { return infinite_.count(v) != 0; }
  bool is_frontier(Vertex v) const { return frontier_.count(v) != 0; }
  // Emits at least one declared edge and carries the Cuntz-Krieger relation.
  bool is_regular(Vertex v) const;
  const std::map<Vertex, std::string>& sigma_table() const { return sigma_; }

  // Vertices named, used as sources, or listed explicitly in a range.
  std::vector<Vertex> mentioned_vertices() const;
  bool has_cofinite_range() const;
  Vertex next_free_index() const;

  VertexSet single(Vertex v) const { return VertexSet::single(universe_, v); }
  VertexSet empty_set() const { return VertexSet::empty(universe_); }
  VertexSet full_set() const { return VertexSet::full(universe_); }

  // Path queries.
  VertexSet range_of(const Path& p) const;
  Vertex end_vertex(const Path& p) const;  // graph kind
  bool composable(const Path& p) const;
  std::string path_name(const Path& p) const;

  bool operator==(const Structure& o) const;

 private:
  std::string name_;
  Kind kind_ = Kind::Graph;
  Universe universe_;
  std::map<Vertex, std::string> names_;
  std::unordered_map<std::string, Vertex> index_of_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  std::map<Vertex, std::vector<EdgeId>> out_;
  std::set<Vertex> infinite_;
  std::set<Vertex> frontier_;
  std::map<Vertex, std::string> sigma_;
};

// Structural queries.
std::vector<Violation> validate(const Structure& s);
// Sinks plus infinite-flagged plus frontier vertices.
VertexSet singular_vertices(const Structure& s);
std::vector<Path> enumerate_paths(const Structure& s, Vertex from, std::size_t max_len);
// All paths of length 1..max_len with s(p) in r(p), one record per base point.
std::vector<Path> find_cycles(const Structure& s, std::size_t max_len);
// Cycles whose edge sources are pairwise distinct.
std::vector<Path> find_simple_cycles(const Structure& s);
bool is_acyclic(const Structure& s);
// Edges whose source lies in r, in index order.
std::vector<EdgeId> continuations(const Structure& s, const VertexSet& r);

}  // namespace lpa
