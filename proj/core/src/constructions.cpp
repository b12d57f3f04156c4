#include "lpa/constructions.hpp"

#include <algorithm>
#include <set>

#include "lpa/errors.hpp"
#include "lpa/set_algebra.hpp"

namespace lpa {

namespace {

std::string unique_name(std::string base, std::set<std::string>& used) {
  while (used.count(base)) base += '_';
  used.insert(base);
  return base;
}

}  // namespace

GFData build_GF(const Structure& g, std::vector<EdgeId> F) {
  std::sort(F.begin(), F.end());
  F.erase(std::unique(F.begin(), F.end()), F.end());
  if (F.size() > 16) throw Error(ErrorKind::TooLarge, "edge set F has more than 16 edges");
  GFData d;
  d.F = F;
  const std::set<EdgeId> in_f(F.begin(), F.end());

  // X qualifies when some vertex of r(X, F \ X) emits an edge outside F.
  for (std::size_t mask = 1; mask < (std::size_t{1} << F.size()); ++mask) {
    std::vector<EdgeId> lambda, mu;
    for (std::size_t i = 0; i < F.size(); ++i) (mask >> i & 1 ? lambda : mu).push_back(F[i]);
    VertexSet r = r_lambda_mu(g, lambda, mu);
    if (r.is_empty()) continue;
    bool escapes = false;
    for (EdgeId e : continuations(g, r))
      if (!in_f.count(e)) escapes = true;
    if (r.is_finite()) {
      for (Vertex v : r.items())
        if (g.is_infinite_flagged(v) || g.is_frontier(v)) escapes = true;
    } else {
      for (Vertex v : g.infinite_flags())
        if (r.contains(v)) escapes = true;
      for (Vertex v : g.frontier_flags())
        if (r.contains(v)) escapes = true;
    }
    if (escapes) d.subsets.push_back(lambda);
  }
  std::sort(d.subsets.begin(), d.subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  std::vector<std::string> names;
  std::set<std::string> used;
  for (EdgeId e : F) {
    d.edge_vertex[e] = static_cast<Vertex>(names.size());
    names.push_back(unique_name(g.edge(e).name, used));
  }
  for (const auto& x : d.subsets) {
    std::string n = "X";
    for (EdgeId e : x) n += "_" + g.edge(e).name;
    d.subset_vertex[x] = static_cast<Vertex>(names.size());
    names.push_back(unique_name(n, used));
  }
  auto out = std::make_shared<Structure>(Structure::finite(g.name() + "_GF", Kind::Graph, names));
  std::set<std::string> edge_names;
  for (EdgeId e : F) {
    Vertex ve = d.edge_vertex.at(e);
    for (EdgeId f : F)
      if (g.edge(e).range.contains(g.edge(f).source))
        d.pair_edge[{e, f}] = out->add_graph_edge(
            unique_name(names[ve] + "_" + names[d.edge_vertex.at(f)], edge_names), ve,
            d.edge_vertex.at(f));
    for (const auto& x : d.subsets)
      if (std::binary_search(x.begin(), x.end(), e))
        d.subset_edge[{e, x}] = out->add_graph_edge(
            unique_name(names[ve] + "_" + names[d.subset_vertex.at(x)], edge_names), ve,
            d.subset_vertex.at(x));
  }
  d.graph = out;
  return d;
}

VertexSet DesingData::map_set(const VertexSet& a) const {
  const Universe& u = graph->universe();
  std::vector<Vertex> items;
  for (Vertex v : a.items()) items.push_back(map_vertex(v));
  if (a.is_finite()) return VertexSet::of(u, items);
  // Cofinite sets also leave out the tail vertices.
  for (const auto& [v, t] : tails) items.insert(items.end(), t.begin(), t.end());
  return VertexSet::cofinite_of(u, items);
}

DesingData desingularize(const Structure& g, std::size_t depth) {
  DesingData d;
  std::vector<Vertex> base;
  if (g.is_nat()) {
    base = g.mentioned_vertices();
    bool anonymous_sinks = g.has_cofinite_range() || !g.infinite_flags().empty();
    if (anonymous_sinks)
      d.warnings.push_back("unmentioned vertices are sinks and receive no tail");
  } else {
    base = g.finite_vertices();
  }

  // Tail plan: (vertex, length, declared edges to reroute).
  struct Plan {
    Vertex v;
    std::size_t length;
    std::vector<EdgeId> reroute;
  };
  std::vector<Plan> plans;
  std::set<EdgeId> rerouted;
  for (Vertex v : base) {
    if (g.is_frontier(v)) continue;
    const auto& out = g.out_edges(v);
    if (g.is_infinite_flagged(v)) {
      plans.push_back({v, std::max(depth, out.size()), out});
      rerouted.insert(out.begin(), out.end());
    } else if (out.empty()) {
      plans.push_back({v, std::max<std::size_t>(depth, 1), {}});
    }
  }
  std::size_t total = 0;
  for (const Plan& p : plans) total += p.length;

  std::shared_ptr<Structure> out;
  std::set<std::string> used;
  for (const auto& [v, n] : g.named_vertices()) used.insert(n);
  std::vector<std::vector<std::string>> tail_names;
  for (const Plan& p : plans) {
    std::vector<std::string> ns;
    for (std::size_t i = 1; i <= p.length; ++i)
      ns.push_back(unique_name(g.vertex_name(p.v) + "_t" + std::to_string(i), used));
    tail_names.push_back(ns);
  }

  if (g.is_nat()) {
    out = std::make_shared<Structure>(Structure::nat(g.name() + "_desing", g.kind()));
    for (const auto& [v, n] : g.named_vertices()) out->add_vertex(n, v);
    d.shift_from = g.next_free_index();
    d.shift_by = static_cast<Vertex>(total);
    Vertex next = d.shift_from;
    for (std::size_t i = 0; i < plans.size(); ++i)
      for (const auto& n : tail_names[i]) d.tails[plans[i].v].push_back(out->add_vertex(n, next++));
  } else {
    std::vector<std::string> names;
    for (Vertex v : base) names.push_back(g.vertex_name(v));
    Vertex next = static_cast<Vertex>(names.size());
    for (std::size_t i = 0; i < plans.size(); ++i)
      for (const auto& n : tail_names[i]) {
        names.push_back(n);
        d.tails[plans[i].v].push_back(next++);
      }
    out = std::make_shared<Structure>(Structure::finite(g.name() + "_desing", g.kind(), names));
    d.shift_from = next;
  }
  d.graph = out;

  std::set<std::string> edge_names;
  for (const Edge& e : g.edges()) edge_names.insert(e.name);
  d.edge_route.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (rerouted.count(e)) continue;
    const Edge& ed = g.edge(e);
    d.edge_route[e] = {out->add_edge(ed.name, d.map_vertex(ed.source), d.map_set(ed.range))};
  }
  std::vector<Vertex> last;
  for (std::size_t i = 0; i < plans.size(); ++i) {
    const Plan& p = plans[i];
    const auto& tail = d.tails.at(p.v);
    std::vector<EdgeId> fs;
    Vertex prev = d.map_vertex(p.v);
    for (std::size_t k = 0; k < p.length; ++k) {
      std::string n = unique_name(g.vertex_name(p.v) + "_f" + std::to_string(k + 1), edge_names);
      fs.push_back(out->add_graph_edge(n, prev, tail[k]));
      prev = tail[k];
    }
    // g_i leaves the (i-1)-th tail vertex with the range of the i-th declared edge.
    for (std::size_t k = 0; k < p.reroute.size(); ++k) {
      const Edge& ed = g.edge(p.reroute[k]);
      Vertex src = k == 0 ? d.map_vertex(p.v) : tail[k - 1];
      EdgeId gi = out->add_edge(unique_name(ed.name + "_g", edge_names), src, d.map_set(ed.range));
      std::vector<EdgeId> route(fs.begin(), fs.begin() + static_cast<long>(k));
      route.push_back(gi);
      d.edge_route[p.reroute[k]] = route;
    }
    last.push_back(tail.back());
  }
  for (Vertex v : g.frontier_flags()) {
    out->flag_frontier(d.map_vertex(v));
    last.push_back(d.map_vertex(v));
  }
  for (Vertex v : last) out->flag_frontier(v);
  d.frontier = VertexSet::of(out->universe(), last);
  return d;
}

std::vector<VertexSet> sigma_unit_sequence(const Structure& g, std::size_t count) {
  std::vector<VertexSet> out;
  if (!g.is_nat()) {
    auto g0 = generate_G0(g);
    for (const VertexSet& s : *g0.closure) {
      if (out.size() == count) break;
      if (!s.is_empty()) out.push_back(s);
    }
    return out;
  }
  for (const Edge& e : g.edges()) {
    if (out.size() == count) return out;
    out.push_back(e.range);
  }
  for (Vertex v = 0; out.size() < count; ++v) out.push_back(g.single(v));
  return out;
}

UltraAlgebra::Element sigma_unit(const UltraAlgebra& alg, std::size_t k) {
  UltraAlgebra::Element t = alg.zero();
  for (const VertexSet& a : disjointify(sigma_unit_sequence(alg.structure(), k)))
    t = alg.add(t, alg.proj(a));
  return t;
}

}  // namespace lpa
