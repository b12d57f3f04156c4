#include "lpa/families.hpp"

#include <algorithm>
#include <set>

#include "lpa/errors.hpp"
#include "lpa/set_algebra.hpp"
#include "lpa/unitized.hpp"

namespace lpa {

namespace {

template <class T>
GeneratorMap<T> blank(std::string name, std::size_t edges) {
  GeneratorMap<T> m;
  m.name = std::move(name);
  m.edge_images.resize(edges);
  m.ghost_images.resize(edges);
  return m;
}

std::string edge_label(const Structure& g, EdgeId e) { return "s(" + g.edge(e).name + ")"; }
std::string ghost_label(const Structure& g, EdgeId e) { return "star(s(" + g.edge(e).name + "))"; }

}  // namespace

GeneratorMap<GraphAlgebra::Element> graph_generators(const GraphAlgebra& alg) {
  const Structure& g = alg.structure();
  auto m = blank<GraphAlgebra::Element>("generators", g.edge_count());
  m.vertex_fallback = [&alg](Vertex v) { return alg.vertex(v); };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    m.edge_images[e] = alg.edge(e);
    m.ghost_images[e] = alg.ghost(e);
  }
  return m;
}

GeneratorMap<UltraAlgebra::Element> ultra_generators(const UltraAlgebra& alg) {
  const Structure& g = alg.structure();
  auto m = blank<UltraAlgebra::Element>("generators", g.edge_count());
  m.vertex_fallback = [&alg](Vertex v) { return alg.vertex(v); };
  m.set_image = [&alg](const VertexSet& a) { return alg.proj(a); };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    m.edge_images[e] = alg.edge(e);
    m.ghost_images[e] = alg.ghost(e);
  }
  return m;
}

GeneratorMap<ELAlgebra::Element> el_generators(const ELAlgebra& alg) {
  const Structure& g = alg.structure();
  auto m = blank<ELAlgebra::Element>("generators", g.edge_count());
  m.vertex_fallback = [&alg](Vertex v) { return alg.vertex(v); };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    m.edge_images[e] = alg.edge(e);
    m.ghost_images[e] = alg.ghost(e);
  }
  return m;
}

GeneratorMap<GraphAlgebra::Element> glugl_family(const GraphAlgebra& tgt) {
  auto m = graph_generators(tgt);
  m.name = "glugl";
  const Structure& g = tgt.structure();
  m.set_image = [&tgt, &g](const VertexSet& a) {
    if (a.is_cofinite())
      throw Error(ErrorKind::MissingGeneratorAssignment,
                  "glugl: p(" + format_vertex_set(g, a) + ") is an infinite sum");
    GraphAlgebra::Element out = tgt.zero();
    for (Vertex v : a.items()) out = tgt.add(out, tgt.vertex(v));
    return out;
  };
  return m;
}

GeneratorMap<UltraAlgebra::Element> gegiso_family(const EGData& eg, const UltraAlgebra& tgt) {
  if (!eg.delta.empty())
    throw Error(ErrorKind::WrongShape, "gegiso: the ultragraph has infinite-range words");
  const Structure& e = *eg.graph;
  auto m = blank<UltraAlgebra::Element>("gegiso", e.edge_count());
  m.zero = tgt.zero();
  for (Vertex gv = 0; gv < e.vertex_count(); ++gv)
    m.vertex_images[gv] = tgt.vertex(eg.vertex_node[gv].v);
  for (const auto& [key, id] : eg.pair_edge) {
    auto p = tgt.vertex(key.second.v);
    m.edge_images[id] = tgt.mul(tgt.edge(key.first), p);
    m.ghost_images[id] = tgt.mul(p, tgt.ghost(key.first));
  }
  return m;
}

GeneratorMap<GraphAlgebra::Element> gegiso_inverse(const EGData& eg, const GraphAlgebra& tgt) {
  if (!eg.delta.empty())
    throw Error(ErrorKind::WrongShape, "gegiso: the ultragraph has infinite-range words");
  const Structure& g = *eg.source;
  auto m = blank<GraphAlgebra::Element>("gegiso-inverse", g.edge_count());
  m.zero = tgt.zero();
  const EGData* egp = &eg;
  auto base = [egp, &tgt, &g](Vertex v) {
    auto gv = egp->vertex_of(EGNode::base(v));
    if (!gv)
      throw Error(ErrorKind::NotReachable, g.vertex_name(v) + " is not reachable: outside the window");
    return tgt.vertex(*gv);
  };
  m.vertex_fallback = base;
  m.set_image = [base, &tgt, &g](const VertexSet& a) {
    if (a.is_cofinite())
      throw Error(ErrorKind::MissingGeneratorAssignment,
                  "gegiso: p(" + format_vertex_set(g, a) + ") is an infinite sum");
    GraphAlgebra::Element out = tgt.zero();
    for (Vertex v : a.items()) out = tgt.add(out, base(v));
    return out;
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!eg.x_complete[e] || !eg.x_emitted[e]) {
      m.missing[edge_label(g, e)] = m.missing[ghost_label(g, e)] = "not reachable: X is truncated";
      continue;
    }
    GraphAlgebra::Element s = tgt.zero(), t = tgt.zero();
    for (const auto& x : eg.x_table[e]) {
      EdgeId id = eg.pair_edge.at({e, x});
      s = tgt.add(s, tgt.edge(id));
      t = tgt.add(t, tgt.ghost(id));
    }
    m.edge_images[e] = s;
    m.ghost_images[e] = t;
  }
  return m;
}

GeneratorMap<UltraAlgebra::Element> el_to_ultra_family(const UltraAlgebra& tgt) {
  auto m = ultra_generators(tgt);
  m.name = "el-to-ultra";
  m.set_image = nullptr;
  return m;
}

GeneratorMap<ELAlgebra::Element> ultra_to_el_family(const ELAlgebra& tgt) {
  auto m = el_generators(tgt);
  m.name = "ultra-to-el";
  const Structure& g = tgt.structure();
  std::optional<EdgeId> anchor;
  for (EdgeId e = 0; e < g.edge_count() && !anchor; ++e)
    if (g.edge(e).range.is_cofinite()) anchor = e;
  m.set_image = [&tgt, &g, anchor](const VertexSet& a) {
    ELAlgebra::Element out = tgt.zero();
    if (a.is_finite()) {
      for (Vertex v : a.items()) out = tgt.add(out, tgt.vertex(v));
      return out;
    }
    if (!anchor)
      throw Error(ErrorKind::MissingGeneratorAssignment,
                  "ultra-to-el: p(" + format_vertex_set(g, a) + ") has no cofinite range to anchor it");
    const VertexSet& r = g.edge(*anchor).range;
    out = tgt.range_proj(*anchor);
    for (Vertex v : a.minus(r).members()) out = tgt.add(out, tgt.vertex(v));
    for (Vertex v : r.minus(a).members()) out = tgt.sub(out, tgt.vertex(v));
    return out;
  };
  return m;
}

GeneratorMap<GraphAlgebra::Element> eg_family(const EGData& eg, const GraphAlgebra& tgt) {
  const Structure& g = *eg.source;
  auto m = blank<GraphAlgebra::Element>("eg-family", g.edge_count());
  m.zero = tgt.zero();
  const EGData* egp = &eg;
  m.vertex_fallback = [egp, &tgt](Vertex v) {
    Path a = alpha_path(*egp, EGNode::base(v));
    return tgt.mono(a, a);
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!eg.x_complete[e] || !eg.x_emitted[e]) {
      m.missing[edge_label(g, e)] = m.missing[ghost_label(g, e)] =
          "not reachable: X(" + g.edge(e).name + ") is cut by the truncation";
      continue;
    }
    try {
      Path as = alpha_path(eg, EGNode::base(g.edge(e).source));
      GraphAlgebra::Element s = tgt.zero();
      for (const EGNode& x : eg.x_table[e]) {
        Path ax = alpha_path(eg, x);
        Path left = as;
        left.edges.push_back(eg.pair_edge.at({e, x}));
        s = tgt.add(s, tgt.mono(left, ax));
      }
      m.edge_images[e] = s;
      m.ghost_images[e] = tgt.star(s);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::NotReachable) throw;
      m.missing[edge_label(g, e)] = m.missing[ghost_label(g, e)] = err.what();
    }
  }
  return m;
}

GeneratorMap<ELAlgebra::Element> gf_family(const GFData& gf, const ELAlgebra& tgt) {
  using U = Unitized<ELAlgebra>;
  const Structure& h = *gf.graph;
  auto m = blank<ELAlgebra::Element>("gf-family", h.edge_count());
  m.zero = tgt.zero();
  ELAlgebra::Element edge_sum = tgt.zero();
  for (EdgeId f : gf.F) {
    auto pe = tgt.mul(tgt.edge(f), tgt.ghost(f));
    m.vertex_images[gf.edge_vertex.at(f)] = pe;
    edge_sum = tgt.add(edge_sum, pe);
  }
  for (const auto& x : gf.subsets) {
    U acc = u_one<ELAlgebra>();
    for (EdgeId f : gf.F) {
      auto q = tgt.range_proj(f);
      bool in = std::binary_search(x.begin(), x.end(), f);
      acc = u_mul(tgt, acc, in ? u_lift<ELAlgebra>(q) : u_complement(tgt, q));
    }
    acc = u_mul(tgt, acc, u_complement(tgt, edge_sum));
    if (!tgt.ring().is_zero(tgt.ring().canon(acc.unit)))
      throw Error(ErrorKind::EngineMismatch, "gf-family: P_X has a unit component");
    m.vertex_images[gf.subset_vertex.at(x)] = tgt.reduce(acc.body);
  }
  for (const auto& [key, id] : gf.pair_edge) {
    const auto& pf = m.vertex_images.at(gf.edge_vertex.at(key.second));
    m.edge_images[id] = tgt.mul(tgt.edge(key.first), pf);
    m.ghost_images[id] = tgt.mul(pf, tgt.ghost(key.first));
  }
  for (const auto& [key, id] : gf.subset_edge) {
    const auto& px = m.vertex_images.at(gf.subset_vertex.at(key.second));
    m.edge_images[id] = tgt.mul(tgt.edge(key.first), px);
    m.ghost_images[id] = tgt.mul(px, tgt.ghost(key.first));
  }
  return m;
}

GeneratorMap<UltraAlgebra::Element> desing_family(const DesingData& d, const UltraAlgebra& tgt) {
  auto m = blank<UltraAlgebra::Element>("desing", d.edge_route.size());
  m.zero = tgt.zero();
  const DesingData* dp = &d;
  m.set_image = [dp, &tgt](const VertexSet& a) { return tgt.proj(dp->map_set(a)); };
  m.vertex_fallback = [dp, &tgt](Vertex v) { return tgt.vertex(dp->map_vertex(v)); };
  const Structure& f = *d.graph;
  for (EdgeId e = 0; e < d.edge_route.size(); ++e) {
    const auto& route = d.edge_route[e];
    Path p{f.edge(route.front()).source, route};
    auto s = tgt.path(p);
    m.edge_images[e] = s;
    m.ghost_images[e] = tgt.star(s);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Frontier detection.

bool touches_frontier(const GraphAlgebra& alg, const GraphAlgebra::Element& x) {
  const Structure& g = alg.structure();
  if (g.frontier_flags().empty()) return false;
  for (const auto& [m, c] : x.terms) {
    if (g.is_frontier(m.v)) return true;
    for (const auto* p : {&m.alpha, &m.beta})
      for (EdgeId e : *p)
        if (g.is_frontier(g.edge(e).source) || g.is_frontier(g.target(e))) return true;
  }
  return false;
}

namespace {

bool set_touches(const Structure& g, const VertexSet& a) {
  for (Vertex f : g.frontier_flags())
    if (a.contains(f)) return true;
  return false;
}

bool path_touches(const Structure& g, const std::vector<EdgeId>& p) {
  for (EdgeId e : p)
    if (g.is_frontier(g.edge(e).source) || set_touches(g, g.edge(e).range)) return true;
  return false;
}

}  // namespace

bool touches_frontier(const UltraAlgebra& alg, const UltraAlgebra::Element& x) {
  const Structure& g = alg.structure();
  if (g.frontier_flags().empty()) return false;
  for (const auto& [m, c] : x.terms)
    if (set_touches(g, m.set) || path_touches(g, m.alpha) || path_touches(g, m.beta)) return true;
  return false;
}

bool touches_frontier(const ELAlgebra& alg, const ELAlgebra::Element& x) {
  const Structure& g = alg.structure();
  if (g.frontier_flags().empty()) return false;
  for (const auto& [m, c] : x.terms)
    if (set_touches(g, alg.middle_set(m.mid)) || path_touches(g, m.alpha) || path_touches(g, m.beta))
      return true;
  return false;
}

// ---------------------------------------------------------------------------
// Samples.

std::vector<Vertex> sample_vertices(const Structure& g) {
  if (!g.is_nat()) return g.finite_vertices();
  std::vector<Vertex> out = g.mentioned_vertices();
  out.push_back(g.next_free_index());
  return out;
}

std::vector<VertexSet> sample_sets(const Structure& g, std::size_t cap) {
  std::vector<VertexSet> out;
  std::set<VertexSet> seen;
  auto push = [&](const VertexSet& s) {
    if (out.size() < cap && seen.insert(s).second) out.push_back(s);
  };
  push(g.empty_set());
  if (!g.is_nat() && g.vertex_count() <= 4) {
    auto g0 = generate_G0(g);
    for (const VertexSet& s : *g0.closure) push(s);
    return out;
  }
  for (const Edge& e : g.edges()) push(e.range);
  auto vs = sample_vertices(g);
  for (std::size_t i = 0; i < vs.size() && i < 3; ++i) push(g.single(vs[i]));
  if (g.is_nat()) push(g.single(g.next_free_index()));
  for (const Edge& a : g.edges())
    for (const Edge& b : g.edges()) {
      push(a.range.intersect(b.range));
      push(a.range.unite(b.range));
      push(a.range.minus(b.range));
    }
  if (!g.is_nat() || g.has_cofinite_range()) push(g.full_set());
  return out;
}

// ---------------------------------------------------------------------------
// Axiom checks.

namespace {

template <class Tgt>
typename Tgt::Element simplify(const Tgt& tgt, const typename Tgt::Element& x) {
  if constexpr (std::is_same_v<Tgt, GraphAlgebra>) return tgt.normalize(x);
  else return tgt.reduce(x);
}

template <class Tgt>
struct Checker {
  using E = typename Tgt::Element;
  const Structure& index;
  const GeneratorMap<E>& m;
  const Tgt& tgt;
  Report rep;

  void verdict(const std::string& group, const std::string& id, Truth t, const E& diff) {
    if (t == Truth::True) return rep.add(group, id, Status::Pass);
    if (t == Truth::Unknown) return rep.add(group, id, Status::Unknown, "not decidable here");
    E d = simplify(tgt, diff);
    if (touches_frontier(tgt, d)) return rep.add(group, id, Status::Skip, "frontier: " + tgt.format(d));
    rep.add(group, id, Status::Fail, tgt.format(d) + " != 0");
  }

  template <class F>
  void check(const std::string& group, const std::string& id, F&& sides) {
    try {
      auto [l, r] = sides();
      verdict(group, id, as_truth(tgt.equal(l, r)), tgt.sub(l, r));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotReachable) rep.add(group, id, Status::Skip, e.what());
      else rep.add(group, id, Status::Fail, e.what());
    }
  }

  template <class F>
  void check_unitized(const std::string& group, const std::string& id, F&& sides) {
    try {
      auto [l, r] = sides();
      verdict(group, id, u_equal(tgt, l, r), tgt.sub(l.body, r.body));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotReachable) rep.add(group, id, Status::Skip, e.what());
      else rep.add(group, id, Status::Fail, e.what());
    }
  }

  std::string vn(Vertex v) const { return index.vertex_name(v); }
  std::string en(EdgeId e) const { return index.edge(e).name; }
  E P(Vertex v) const { return m.vertex_image(v, "p(" + vn(v) + ")"); }
  E S(EdgeId e) const { return m.edge_image(e, edge_label(index, e)); }
  E St(EdgeId e) const { return m.ghost_image(e, ghost_label(index, e)); }
  E PA(const VertexSet& a) const {
    if (!m.set_image) m.fail("p(" + format_vertex_set(index, a) + ")");
    return m.set_image(a);
  }
  E mul(const E& a, const E& b) const { return tgt.mul(a, b); }

  std::vector<Vertex> regular(const std::vector<Vertex>& vs) const {
    std::vector<Vertex> out;
    for (Vertex v : index.sources())
      if (index.is_regular(v) && std::find(vs.begin(), vs.end(), v) != vs.end()) out.push_back(v);
    return out;
  }

  void lp(const std::vector<Vertex>& vs) {
    for (Vertex v : vs)
      for (Vertex w : vs)
        check("LP1", vn(v) + "," + vn(w), [&] { return std::pair{mul(P(v), P(w)), v == w ? P(v) : tgt.zero()}; });
    for (EdgeId e = 0; e < index.edge_count(); ++e) {
      Vertex s = index.edge(e).source, r = index.target(e);
      check("LP2", en(e) + ":source-left", [&] { return std::pair{mul(P(s), S(e)), S(e)}; });
      check("LP2", en(e) + ":range-right", [&] { return std::pair{mul(S(e), P(r)), S(e)}; });
      check("LP2", en(e) + ":range-left*", [&] { return std::pair{mul(P(r), St(e)), St(e)}; });
      check("LP2", en(e) + ":source-right*", [&] { return std::pair{mul(St(e), P(s)), St(e)}; });
    }
    for (EdgeId e = 0; e < index.edge_count(); ++e)
      for (EdgeId f = 0; f < index.edge_count(); ++f)
        check("LP3", en(e) + "," + en(f), [&] {
          return std::pair{mul(St(e), S(f)), e == f ? P(index.target(e)) : tgt.zero()};
        });
    for (Vertex v : regular(vs))
      check("LP4", vn(v), [&] {
        E sum = tgt.zero();
        for (EdgeId e : index.out_edges(v)) sum = tgt.add(sum, mul(S(e), St(e)));
        return std::pair{P(v), sum};
      });
  }

  void ulp(const std::vector<Vertex>& vs, const std::vector<VertexSet>& sets) {
    auto sn = [&](const VertexSet& a) { return format_vertex_set(index, a); };
    check("uLP1", "empty", [&] { return std::pair{PA(index.empty_set()), tgt.zero()}; });
    for (const auto& a : sets)
      for (const auto& b : sets) {
        std::string id = sn(a) + "," + sn(b);
        check("uLP1", id + ":meet", [&] { return std::pair{mul(PA(a), PA(b)), PA(a.intersect(b))}; });
        check("uLP1", id + ":join", [&] {
          return std::pair{PA(a.unite(b)), tgt.sub(tgt.add(PA(a), PA(b)), PA(a.intersect(b)))};
        });
      }
    for (EdgeId e = 0; e < index.edge_count(); ++e) {
      VertexSet s = index.single(index.edge(e).source);
      const VertexSet& r = index.edge(e).range;
      check("uLP2", en(e) + ":source-left", [&] { return std::pair{mul(PA(s), S(e)), S(e)}; });
      check("uLP2", en(e) + ":range-right", [&] { return std::pair{mul(S(e), PA(r)), S(e)}; });
      check("uLP2", en(e) + ":range-left*", [&] { return std::pair{mul(PA(r), St(e)), St(e)}; });
      check("uLP2", en(e) + ":source-right*", [&] { return std::pair{mul(St(e), PA(s)), St(e)}; });
    }
    for (EdgeId e = 0; e < index.edge_count(); ++e)
      for (EdgeId f = 0; f < index.edge_count(); ++f)
        check("uLP3", en(e) + "," + en(f), [&] {
          return std::pair{mul(St(e), S(f)), e == f ? PA(index.edge(e).range) : tgt.zero()};
        });
    for (Vertex v : regular(vs))
      check("uLP4", vn(v), [&] {
        E sum = tgt.zero();
        for (EdgeId e : index.out_edges(v)) sum = tgt.add(sum, mul(S(e), St(e)));
        return std::pair{PA(index.single(v)), sum};
      });
  }

  void exl(const std::vector<Vertex>& vs, const CheckOptions& o) {
    auto Q = [&](EdgeId e) { return mul(St(e), S(e)); };
    const std::size_t n = index.edge_count();
    // EL1 to EL3 on the projections P_v and Q_e = S_e^* S_e.
    for (Vertex v : vs)
      for (Vertex w : vs)
        check("EL1", vn(v) + "," + vn(w), [&] { return std::pair{mul(P(v), P(w)), v == w ? P(v) : tgt.zero()}; });
    for (EdgeId e = 0; e < n; ++e) {
      check("EL2", en(e) + ":idempotent", [&] { return std::pair{mul(Q(e), Q(e)), Q(e)}; });
      for (EdgeId f = e + 1; f < n; ++f)
        check("EL2", en(e) + "," + en(f), [&] { return std::pair{mul(Q(e), Q(f)), mul(Q(f), Q(e))}; });
    }
    for (Vertex v : vs)
      for (EdgeId e = 0; e < n; ++e) {
        bool in = index.edge(e).range.contains(v);
        check("EL3", vn(v) + "," + en(e) + ":left", [&] { return std::pair{mul(P(v), Q(e)), in ? P(v) : tgt.zero()}; });
        check("EL3", vn(v) + "," + en(e) + ":right", [&] { return std::pair{mul(Q(e), P(v)), in ? P(v) : tgt.zero()}; });
      }
    if (o.el4) el4(o.el4_edges);
    for (EdgeId e = 0; e < n; ++e) {
      Vertex s = index.edge(e).source;
      check("ExL2", en(e) + ":source-left", [&] { return std::pair{mul(P(s), S(e)), S(e)}; });
      check("ExL2", en(e) + ":partial-isometry", [&] { return std::pair{mul(mul(S(e), St(e)), S(e)), S(e)}; });
      check("ExL2", en(e) + ":partial-isometry*", [&] { return std::pair{mul(mul(St(e), S(e)), St(e)), St(e)}; });
      check("ExL2", en(e) + ":source-right*", [&] { return std::pair{mul(St(e), P(s)), St(e)}; });
    }
    for (EdgeId e = 0; e < n; ++e)
      for (EdgeId f = 0; f < n; ++f)
        if (e != f) check("ExL3", en(f) + "," + en(e), [&] { return std::pair{mul(St(f), S(e)), tgt.zero()}; });
    for (Vertex v : regular(vs))
      check("ExL4", vn(v), [&] {
        E sum = tgt.zero();
        for (EdgeId e : index.out_edges(v)) sum = tgt.add(sum, mul(S(e), St(e)));
        return std::pair{P(v), sum};
      });
  }

  void el4(std::size_t bound) {
    using U = Unitized<Tgt>;
    const std::size_t n = index.edge_count();
    std::vector<EdgeId> pick;
    // Every edge subset of size <= bound, split into nonempty lambda and mu.
    std::function<void(EdgeId)> choose = [&](EdgeId from) {
      if (!pick.empty()) {
        const std::size_t k = pick.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
          std::vector<EdgeId> lambda, mu;
          for (std::size_t i = 0; i < k; ++i) (mask >> i & 1 ? lambda : mu).push_back(pick[i]);
          VertexSet r = r_lambda_mu(index, lambda, mu);
          if (r.is_cofinite()) continue;
          std::string id = "{";
          for (EdgeId e : lambda) id += (id.size() > 1 ? " " : "") + en(e);
          id += "},{";
          for (std::size_t i = 0; i < mu.size(); ++i) id += (i ? " " : "") + en(mu[i]);
          id += "}";
          check_unitized("EL4", id, [&] {
            U acc = u_one<Tgt>();
            for (EdgeId e : lambda) acc = u_mul(tgt, acc, u_lift<Tgt>(mul(St(e), S(e))));
            for (EdgeId f : mu) acc = u_mul(tgt, acc, u_complement(tgt, mul(St(f), S(f))));
            E sum = tgt.zero();
            for (Vertex v : r.items()) sum = tgt.add(sum, P(v));
            return std::pair{acc, u_lift<Tgt>(sum)};
          });
        }
      }
      if (pick.size() == bound) return;
      for (EdgeId e = from; e < n; ++e) {
        pick.push_back(e);
        choose(e + 1);
        pick.pop_back();
      }
    };
    choose(0);
  }
};

const char* axioms_name(Axioms ax) {
  switch (ax) {
    case Axioms::LP: return "LP";
    case Axioms::uLP: return "uLP";
    case Axioms::ExL: return "ExL";
  }
  return "?";
}

template <class Tgt>
Report run_check(const Structure& index, const GeneratorMap<typename Tgt::Element>& m, const Tgt& tgt,
                 Axioms ax, const CheckOptions& o) {
  Checker<Tgt> c{index, m, tgt, {}};
  c.rep.suite = m.name + " " + axioms_name(ax);
  c.rep.subject = index.name();
  std::vector<Vertex> vs = o.vertices.empty() ? sample_vertices(index) : o.vertices;
  switch (ax) {
    case Axioms::LP: c.lp(vs); break;
    case Axioms::uLP: c.ulp(vs, o.sets.empty() ? sample_sets(index) : o.sets); break;
    case Axioms::ExL: c.exl(vs, o); break;
  }
  return c.rep;
}

}  // namespace

Report check_family(const Structure& index, const GeneratorMap<GraphAlgebra::Element>& m,
                    const GraphAlgebra& tgt, Axioms ax, const CheckOptions& opts) {
  return run_check(index, m, tgt, ax, opts);
}
Report check_family(const Structure& index, const GeneratorMap<UltraAlgebra::Element>& m,
                    const UltraAlgebra& tgt, Axioms ax, const CheckOptions& opts) {
  return run_check(index, m, tgt, ax, opts);
}
Report check_family(const Structure& index, const GeneratorMap<ELAlgebra::Element>& m,
                    const ELAlgebra& tgt, Axioms ax, const CheckOptions& opts) {
  return run_check(index, m, tgt, ax, opts);
}

}  // namespace lpa
