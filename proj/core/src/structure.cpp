#include "lpa/structure.hpp"

#include <algorithm>
#include <functional>

#include "lpa/errors.hpp"

namespace lpa {

namespace {
const std::vector<EdgeId> kNoEdges;
}

Structure Structure::finite(std::string name, Kind kind, const std::vector<std::string>& vertices) {
  Structure s;
  s.name_ = std::move(name);
  s.kind_ = kind;
  s.universe_ = Universe::finite(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!s.index_of_.emplace(vertices[i], static_cast<Vertex>(i)).second)
      throw Error(ErrorKind::InvalidStructure, "duplicate vertex " + vertices[i]);
    s.names_[static_cast<Vertex>(i)] = vertices[i];
  }
  return s;
}

Structure Structure::nat(std::string name, Kind kind) {
  Structure s;
  s.name_ = std::move(name);
  s.kind_ = kind;
  s.universe_ = Universe::naturals();
  return s;
}

Vertex Structure::add_vertex(const std::string& name, std::optional<Vertex> index) {
  if (!universe_.nat) throw Error(ErrorKind::InvalidStructure, "add_vertex needs a nat universe");
  if (index_of_.count(name)) throw Error(ErrorKind::InvalidStructure, "duplicate vertex " + name);
  Vertex v = index ? *index : next_free_index();
  if (names_.count(v))
    throw Error(ErrorKind::InvalidStructure, "index " + std::to_string(v) + " already named");
  names_[v] = name;
  index_of_[name] = v;
  return v;
}

EdgeId Structure::add_edge(const std::string& name, Vertex source, VertexSet range) {
  if (edge_index_.count(name)) throw Error(ErrorKind::InvalidStructure, "duplicate edge " + name);
  if (range.universe() != universe_)
    throw Error(ErrorKind::UniverseMismatch, "edge range from another universe");
  auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back(Edge{name, source, std::move(range)});
  edge_index_[name] = id;
  out_[source].push_back(id);
  return id;
}

EdgeId Structure::add_graph_edge(const std::string& name, Vertex source, Vertex target) {
  return add_edge(name, source, VertexSet::single(universe_, target));
}

void Structure::set_range(EdgeId e, VertexSet range) { edges_.at(e).range = std::move(range); }

std::optional<Vertex> Structure::find_vertex(const std::string& name) const {
  auto it = index_of_.find(name);
  if (it != index_of_.end()) return it->second;
  if (universe_.nat && name.size() > 1 && name[0] == '_' &&
      name.find_first_not_of("0123456789", 1) == std::string::npos)
    return static_cast<Vertex>(std::stoul(name.substr(1)));
  return std::nullopt;
}

Vertex Structure::vertex(const std::string& name) const {
  auto v = find_vertex(name);
  if (!v) throw Error(ErrorKind::InvalidStructure, "unknown vertex " + name);
  return *v;
}

std::optional<EdgeId> Structure::find_edge(const std::string& name) const {
  auto it = edge_index_.find(name);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

EdgeId Structure::edge_id(const std::string& name) const {
  auto e = find_edge(name);
  if (!e) throw Error(ErrorKind::MissingGeneratorAssignment, "unknown edge " + name);
  return *e;
}

std::string Structure::vertex_name(Vertex v) const {
  auto it = names_.find(v);
  if (it != names_.end()) return it->second;
  return "_" + std::to_string(v);
}

std::size_t Structure::vertex_count() const {
  if (universe_.nat) throw Error(ErrorKind::TruncationExceeded, "vertex count of a nat universe");
  return universe_.size;
}

std::vector<Vertex> Structure::finite_vertices() const {
  std::vector<Vertex> out(vertex_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Vertex>(i);
  return out;
}

const std::vector<EdgeId>& Structure::out_edges(Vertex v) const {
  auto it = out_.find(v);
  return it == out_.end() ? kNoEdges : it->second;
}

std::vector<Vertex> Structure::sources() const {
  std::vector<Vertex> out;
  for (const auto& [v, es] : out_) out.push_back(v);
  return out;
}

bool Structure::is_regular(Vertex v) const {
  return !out_edges(v).empty() && !infinite_.count(v) && !frontier_.count(v);
}

std::vector<Vertex> Structure::mentioned_vertices() const {
  std::set<Vertex> seen;
  for (const auto& [v, n] : names_) seen.insert(v);
  for (const Edge& e : edges_) {
    seen.insert(e.source);
    for (Vertex v : e.range.items()) seen.insert(v);
  }
  for (Vertex v : infinite_) seen.insert(v);
  for (Vertex v : frontier_) seen.insert(v);
  return {seen.begin(), seen.end()};
}

bool Structure::has_cofinite_range() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.range.is_cofinite(); });
}

Vertex Structure::next_free_index() const {
  Vertex next = 0;
  for (Vertex v : mentioned_vertices()) next = std::max(next, v + 1);
  return next;
}

VertexSet Structure::range_of(const Path& p) const {
  if (p.edges.empty()) return single(p.start);
  return edges_.at(p.edges.back()).range;
}

Vertex Structure::end_vertex(const Path& p) const {
  return p.edges.empty() ? p.start : target(p.edges.back());
}

bool Structure::composable(const Path& p) const {
  if (p.edges.empty()) return true;
  if (edges_.at(p.edges.front()).source != p.start) return false;
  for (std::size_t i = 1; i < p.edges.size(); ++i)
    if (!edges_.at(p.edges[i - 1]).range.contains(edges_.at(p.edges[i]).source)) return false;
  return true;
}

std::string Structure::path_name(const Path& p) const {
  if (p.edges.empty()) return vertex_name(p.start);
  std::string out;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) out += ' ';
    out += edges_.at(p.edges[i]).name;
  }
  return out;
}

bool Structure::operator==(const Structure& o) const {
  return name_ == o.name_ && kind_ == o.kind_ && universe_ == o.universe_ && names_ == o.names_ &&
         infinite_ == o.infinite_ && frontier_ == o.frontier_ && sigma_ == o.sigma_ &&
         std::equal(edges_.begin(), edges_.end(), o.edges_.begin(), o.edges_.end(),
                    [](const Edge& a, const Edge& b) {
                      return a.name == b.name && a.source == b.source && a.range == b.range;
                    });
}

std::vector<Violation> validate(const Structure& s) {
  std::vector<Violation> out;
  for (const Edge& e : s.edges()) {
    if (e.range.is_empty()) out.push_back({e.name, "empty range"});
    if (!s.is_nat() && e.source >= s.universe().size) out.push_back({e.name, "unknown vertex"});
    if (s.kind() == Kind::Graph && (e.range.is_cofinite() || e.range.items().size() != 1))
      out.push_back({e.name, "graph edge needs a single target"});
  }
  for (const auto& [v, w] : s.sigma_table()) {
    if (w.empty() || w.find_first_not_of("01") != std::string::npos)
      out.push_back({s.vertex_name(v), "sigma word must be a nonempty bit string"});
  }
  return out;
}

VertexSet singular_vertices(const Structure& s) {
  std::vector<Vertex> regular;
  for (Vertex v : s.sources())
    if (s.is_regular(v)) regular.push_back(v);
  return VertexSet::of(s.universe(), regular).complement();
}

std::vector<EdgeId> continuations(const Structure& s, const VertexSet& r) {
  std::vector<EdgeId> out;
  if (r.is_finite()) {
    for (Vertex v : r.items())
      for (EdgeId e : s.out_edges(v)) out.push_back(e);
  } else {
    for (EdgeId e = 0; e < s.edge_count(); ++e)
      if (r.contains(s.edge(e).source)) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> enumerate_paths(const Structure& s, Vertex from, std::size_t max_len) {
  std::vector<Path> out;
  Path cur{from, {}};
  std::function<void(const VertexSet&)> grow = [&](const VertexSet& r) {
    out.push_back(cur);
    if (cur.edges.size() == max_len) return;
    for (EdgeId e : continuations(s, r)) {
      cur.edges.push_back(e);
      grow(s.edge(e).range);
      cur.edges.pop_back();
    }
  };
  grow(s.single(from));
  return out;
}

std::vector<Path> find_cycles(const Structure& s, std::size_t max_len) {
  std::vector<Path> out;
  for (Vertex v : s.sources()) {
    for (const Path& p : enumerate_paths(s, v, max_len)) {
      if (p.edges.empty()) continue;
      if (s.range_of(p).contains(p.start)) out.push_back(p);
    }
  }
  return out;
}

std::vector<Path> find_simple_cycles(const Structure& s) {
  std::vector<Path> out;
  for (Vertex v : s.sources()) {
    Path cur{v, {}};
    std::set<Vertex> used{v};
    std::function<void()> grow = [&]() {
      const VertexSet& r = s.edge(cur.edges.back()).range;
      if (r.contains(v)) out.push_back(cur);
      for (EdgeId e : continuations(s, r)) {
        Vertex src = s.edge(e).source;
        if (used.count(src)) continue;
        used.insert(src);
        cur.edges.push_back(e);
        grow();
        cur.edges.pop_back();
        used.erase(src);
      }
    };
    for (EdgeId e : s.out_edges(v)) {
      cur.edges.push_back(e);
      grow();
      cur.edges.pop_back();
    }
  }
  return out;
}

bool is_acyclic(const Structure& s) { return find_simple_cycles(s).empty(); }

}  // namespace lpa
