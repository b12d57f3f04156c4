#include "lpa/eg.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "lpa/errors.hpp"

namespace lpa {

VertexSet word_range(const Structure& g, const Word& w) {
  VertexSet r = g.full_set();
  for (std::size_t i = 1; i <= w.length(); ++i) {
    const VertexSet& re = g.edge(static_cast<EdgeId>(i - 1)).range;
    r = w.bit(i) ? r.intersect(re) : r.minus(re);
  }
  return r;
}

bool EGData::in_window(Vertex v) const {
  return source->is_nat() ? v <= window_limit : v < source->universe().size;
}

std::optional<Vertex> EGData::vertex_of(const EGNode& n) const {
  auto it = node_vertex.find(n);
  if (it == node_vertex.end()) return std::nullopt;
  return it->second;
}

bool EGData::accepted_source(Vertex gv) const {
  const EGNode& n = vertex_node.at(gv);
  return n.is_word ? in_gamma0(n.w) : w_zero.contains(n.v);
}

std::string EGData::node_name(const EGNode& n) const {
  if (auto v = vertex_of(n)) return graph->vertex_name(*v);
  return n.is_word ? "o_" + n.w.bits : source->vertex_name(n.v);
}

namespace {

Word signature(const Structure& g, Vertex v, std::size_t n) {
  Word w;
  for (std::size_t i = 0; i < n; ++i) w.bits += g.edge(static_cast<EdgeId>(i)).range.contains(v) ? '1' : '0';
  return w;
}

// Membership pattern shared by every vertex no edge mentions.
Word anonymous_signature(const Structure& g, std::size_t n) {
  Word w;
  for (std::size_t i = 0; i < n; ++i) w.bits += g.edge(static_cast<EdgeId>(i)).range.is_cofinite() ? '1' : '0';
  return w;
}

std::string unique_name(std::string base, std::set<std::string>& used) {
  while (used.count(base)) base += '_';
  used.insert(base);
  return base;
}

}  // namespace

EGData build_EG(std::shared_ptr<const Structure> gp, const EGOptions& opts) {
  const Structure& g = *gp;
  EGData eg;
  eg.source = gp;
  eg.edge_count = g.edge_count();
  eg.depth = std::min(opts.depth.value_or(std::min<std::size_t>(eg.edge_count, 4)), eg.edge_count);
  eg.capacity = opts.capacity;
  eg.user_sigma = opts.user_sigma;
  const std::size_t m = eg.edge_count;

  // Words with infinite range. Below a word at most one child is infinite
  // in a Nat universe, so the search stays linear there.
  std::function<void(const Word&, const VertexSet&)> grow = [&](const Word& w, const VertexSet& r) {
    if (w.length() == m) return;
    const VertexSet& re = g.edge(static_cast<EdgeId>(w.length())).range;
    for (bool b : {false, true}) {
      Word c = w.child(b);
      VertexSet rc = b ? r.intersect(re) : r.minus(re);
      if (!rc.is_cofinite()) continue;
      if (!c.is_zero()) eg.word_ranges.emplace(c, rc);
      grow(c, rc);
    }
  };
  grow(Word{}, g.full_set());
  for (const auto& [w, r] : eg.word_ranges) {
    eg.delta.push_back(w);
    (w.is_initial() ? eg.gamma0 : eg.gamma_plus).push_back(w);
  }
  eg.w_plus = g.empty_set();
  for (const auto& [w, r] : eg.word_ranges) eg.w_plus = eg.w_plus.unite(r);
  eg.w_zero = eg.w_plus.complement();

  if (g.is_nat()) {
    std::size_t limit = opts.window;
    for (Vertex v : g.mentioned_vertices()) limit = std::max<std::size_t>(limit, v);
    eg.window_limit = limit;
    for (std::size_t v = 0; v <= limit; ++v) eg.window.push_back(static_cast<Vertex>(v));
  } else {
    eg.window = g.finite_vertices();
    eg.window_limit = eg.window.empty() ? 0 : eg.window.back();
  }

  // Sigma.
  if (opts.user_sigma) {
    for (const auto& [v, bits] : g.sigma_table()) {
      Word w{bits};
      if (!eg.in_delta(w))
        throw Error(ErrorKind::SigmaStrategyFailed,
                    "sigma(" + g.vertex_name(v) + ") = " + bits + " is not an infinite-range word");
      if (!eg.word_ranges.at(w).contains(v))
        throw Error(ErrorKind::SigmaStrategyFailed,
                    g.vertex_name(v) + " is not in r(" + bits + ")");
      eg.sigma[v] = w;
      if (eg.in_window(v)) ++eg.load[w];
    }
    for (Vertex v : eg.window)
      if (eg.w_plus.contains(v) && !eg.sigma.count(v))
        throw Error(ErrorKind::SigmaStrategyFailed, "no sigma entry for " + g.vertex_name(v));
  } else {
    for (Vertex v : eg.window) {
      if (!eg.w_plus.contains(v)) continue;
      bool placed = false;
      for (std::size_t n = 1; n <= m && !placed; ++n) {
        Word w = signature(g, v, n);
        if (!eg.in_delta(w) || eg.load[w] >= eg.capacity) continue;
        eg.sigma[v] = w;
        ++eg.load[w];
        placed = true;
      }
      if (!placed)
        eg.warnings.push_back("finite-preimage contract unsatisfiable: no word left for " +
                              g.vertex_name(v));
    }
  }

  // Anonymous vertices beyond the window lie in W+ exactly when a range is cofinite.
  const bool rest_in_plus = g.is_nat() && g.has_cofinite_range();
  const Word anon = anonymous_signature(g, m);
  auto slot_free_below = [&](std::size_t n) {
    for (std::size_t k = 1; k < n; ++k) {
      Word a = anon.prefix(k);
      if (eg.in_delta(a) && eg.load[a] < eg.capacity) return true;
    }
    return false;
  };

  // X(e_n).
  eg.x_table.resize(m);
  eg.x_complete.assign(m, true);
  eg.x_emitted.assign(m, true);
  for (std::size_t n = 1; n <= m; ++n) {
    const Edge& e = g.edge(static_cast<EdgeId>(n - 1));
    auto& xs = eg.x_table[n - 1];
    for (Vertex v : eg.window) {
      if (!e.range.contains(v)) continue;
      if (!eg.w_plus.contains(v)) {
        xs.push_back(EGNode::base(v));
        continue;
      }
      auto it = eg.sigma.find(v);
      if (it == eg.sigma.end()) eg.x_complete[n - 1] = false;
      else if (it->second.length() < n) xs.push_back(EGNode::base(v));
    }
    for (const Word& w : eg.delta)
      if (w.length() == n && w.bit(n)) {
        xs.push_back(EGNode::word(w));
        if (n > eg.depth) eg.x_emitted[n - 1] = false;
      }
    if (rest_in_plus && e.range.is_cofinite()) {
      if (opts.user_sigma ? n > 1 : slot_free_below(n)) eg.x_complete[n - 1] = false;
    }
    if (xs.empty() && eg.x_complete[n - 1])
      eg.warnings.push_back("X(" + e.name + ") is empty");
  }

  // Vertices.
  std::vector<std::string> names;
  std::set<std::string> used;
  auto add_node = [&](const EGNode& node, std::string name) {
    eg.node_vertex[node] = static_cast<Vertex>(names.size());
    eg.vertex_node.push_back(node);
    names.push_back(unique_name(std::move(name), used));
  };
  for (Vertex v : eg.window) add_node(EGNode::base(v), g.vertex_name(v));
  for (const Word& w : eg.delta)
    if (w.length() <= eg.depth) add_node(EGNode::word(w), "o_" + w.bits);
  auto out = std::make_shared<Structure>(Structure::finite(g.name() + "_EG", Kind::Graph, names));

  // Edges.
  std::set<std::string> edge_names;
  for (const auto& [v, w] : eg.sigma) {
    auto src = eg.vertex_of(EGNode::word(w));
    auto dst = eg.vertex_of(EGNode::base(v));
    if (!src || !dst) continue;
    eg.vertex_edge[v] = out->add_graph_edge(unique_name("e_" + names[*dst], edge_names), *src, *dst);
  }
  for (const Word& w : eg.gamma_plus) {
    auto dst = eg.vertex_of(EGNode::word(w));
    if (!dst) continue;
    Vertex src = *eg.vertex_of(EGNode::word(w.prefix(w.length() - 1)));
    eg.word_edge[w] = out->add_graph_edge(unique_name("e_" + names[*dst], edge_names), src, *dst);
  }
  for (std::size_t n = 1; n <= m; ++n) {
    auto id = static_cast<EdgeId>(n - 1);
    const Edge& e = g.edge(id);
    auto src = eg.vertex_of(EGNode::base(e.source));
    if (!src) continue;
    for (const EGNode& x : eg.x_table[n - 1]) {
      auto dst = eg.vertex_of(x);
      if (!dst) continue;
      eg.pair_edge[{id, x}] =
          out->add_graph_edge(unique_name(e.name + "_" + names[*dst], edge_names), *src, *dst);
    }
  }

  // Flags.
  for (Vertex v : eg.window) {
    Vertex gv = *eg.vertex_of(EGNode::base(v));
    if (g.is_infinite_flagged(v)) out->flag_infinite(gv);
    bool cut = g.is_frontier(v);
    for (EdgeId e : g.out_edges(v))
      if (!eg.x_complete[e] || !eg.x_emitted[e]) cut = true;
    if (cut) out->flag_frontier(gv);
  }
  for (const Word& w : eg.delta) {
    auto gv = eg.vertex_of(EGNode::word(w));
    if (!gv) continue;
    bool cut = false;
    if (w.length() == eg.depth && eg.depth < m)
      cut = eg.in_delta(w.child(false)) || eg.in_delta(w.child(true));
    if (opts.user_sigma || eg.load[w] < eg.capacity) cut = cut || rest_in_plus;
    if (cut) out->flag_frontier(*gv);
  }
  eg.graph = out;
  return eg;
}

Path alpha_path(const EGData& eg, const EGNode& x) {
  auto gv = eg.vertex_of(x);
  if (!gv) throw Error(ErrorKind::NotReachable, eg.node_name(x) + " is not reachable: outside the truncation");
  std::vector<EdgeId> rev;
  EGNode cur = x;
  Vertex at = *gv;
  while (!eg.accepted_source(at)) {
    EdgeId step;
    if (!cur.is_word) {
      auto it = eg.vertex_edge.find(cur.v);
      if (it == eg.vertex_edge.end())
        throw Error(ErrorKind::NotReachable,
                    eg.node_name(x) + " is not reachable: no sigma edge into " + eg.node_name(cur));
      step = it->second;
      cur = EGNode::word(eg.sigma.at(cur.v));
    } else {
      step = eg.word_edge.at(cur.w);
      cur = EGNode::word(cur.w.prefix(cur.w.length() - 1));
    }
    rev.push_back(step);
    at = eg.graph->edge(step).source;
  }
  return Path{at, {rev.rbegin(), rev.rend()}};
}

std::vector<Path> alpha_paths_exhaustive(const EGData& eg, const EGNode& x) {
  std::vector<Path> out;
  auto gv = eg.vertex_of(x);
  if (!gv) return out;
  const Structure& f = *eg.graph;
  std::vector<EdgeId> f_edges;
  for (const auto& [v, e] : eg.vertex_edge) f_edges.push_back(e);
  for (const auto& [w, e] : eg.word_edge) f_edges.push_back(e);
  std::vector<EdgeId> rev;
  std::function<void(Vertex)> back = [&](Vertex at) {
    if (eg.accepted_source(at)) out.push_back(Path{at, {rev.rbegin(), rev.rend()}});
    if (rev.size() > f.vertex_count()) return;  // F is acyclic; guard anyway
    for (EdgeId e : f_edges) {
      if (f.target(e) != at) continue;
      rev.push_back(e);
      back(f.edge(e).source);
      rev.pop_back();
    }
  };
  back(*gv);
  return out;
}

VertexSet r_prime(const EGData& eg, const Word& w) {
  std::vector<Vertex> out;
  for (const auto& [v, s] : eg.sigma)
    if (eg.in_window(v) && s.length() >= w.length() && s.prefix(w.length()) == w) out.push_back(v);
  return VertexSet::of(eg.source->universe(), out);
}

Structure subgraph_F(const EGData& eg) {
  const Structure& e = *eg.graph;
  std::vector<std::string> names;
  for (Vertex v = 0; v < e.vertex_count(); ++v) names.push_back(e.vertex_name(v));
  Structure f = Structure::finite(e.name() + "_F", Kind::Graph, names);
  std::vector<EdgeId> keep;
  for (const auto& [v, id] : eg.vertex_edge) keep.push_back(id);
  for (const auto& [w, id] : eg.word_edge) keep.push_back(id);
  std::sort(keep.begin(), keep.end());
  for (EdgeId id : keep) f.add_graph_edge(e.edge(id).name, e.edge(id).source, e.target(id));
  return f;
}

GraphAlgebra::Element corner_project(const EGData& eg, const GraphAlgebra& alg,
                                     const GraphAlgebra::Element& x, Side side) {
  GraphAlgebra::Element out;
  for (const auto& [m, c] : x.terms) {
    bool keep = true;
    if (side != Side::Right) keep = keep && eg.accepted_source(alg.source_of(m, true));
    if (side != Side::Left) keep = keep && eg.accepted_source(alg.source_of(m, false));
    if (keep) out.terms.emplace(m, c);
  }
  return out;
}

}  // namespace lpa
