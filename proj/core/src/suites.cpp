#include "lpa/suites.hpp"

#include <algorithm>
#include <random>

#include "lpa/analysis.hpp"
#include "lpa/constructions.hpp"
#include "lpa/el_algebra.hpp"
#include "lpa/errors.hpp"
#include "lpa/families.hpp"
#include "lpa/graph_algebra.hpp"
#include "lpa/ultra_algebra.hpp"
#include "lpa/unitized.hpp"

namespace lpa {

std::vector<Vertex> short_sigma_vertices(const EGData& eg, const Word& w) {
  std::vector<Vertex> out;
  VertexSet r = word_range(*eg.source, w);
  for (Vertex v : eg.window) {
    if (!r.contains(v)) continue;
    auto it = eg.sigma.find(v);
    if (it != eg.sigma.end() && it->second.length() < w.length()) out.push_back(v);
  }
  return out;
}

namespace {

using GE = GraphAlgebra::Element;
using UE = UltraAlgebra::Element;

// Runs one instance; truncation gaps become skips, other errors failures.
template <class F>
void instance(Report& rep, const std::string& group, const std::string& id, F&& body) {
  try {
    auto [status, witness] = body();
    rep.add(group, id, status, witness);
  } catch (const Error& e) {
    Status s = e.kind() == ErrorKind::NotReachable ? Status::Skip : Status::Fail;
    rep.add(group, id, s, e.what());
  }
}

std::pair<Status, std::string> from_truth(Truth t, const std::string& witness) {
  if (t == Truth::True) return {Status::Pass, {}};
  if (t == Truth::Unknown) return {Status::Unknown, "not decidable here"};
  return {Status::Fail, witness};
}

template <class Alg>
Truth lci_identity(const Alg& alg, const std::vector<typename Alg::Element>& ps) {
  using U = Unitized<Alg>;
  std::size_t n = ps.size();
  U lhs{Coef(0), alg.zero()};
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    U prod = u_one<Alg>();
    for (std::size_t i = 0; i < n; ++i)
      prod = u_mul(alg, prod, mask >> i & 1 ? u_lift<Alg>(ps[i]) : u_complement(alg, ps[i]));
    lhs = u_add(alg, lhs, prod);
  }
  U rest = u_one<Alg>();
  for (const auto& p : ps) rest = u_mul(alg, rest, u_complement(alg, p));
  U rhs = u_sub(alg, u_one<Alg>(), rest);
  return u_equal(alg, lhs, rhs);
}

std::string edge_list(const Structure& g, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out += (i ? "," : "") + g.edge(static_cast<EdgeId>(i)).name;
  return out;
}

// Pair edge of the constructed graph -> (source edge, node).
std::map<EdgeId, std::pair<EdgeId, EGNode>> pair_edges_by_id(const EGData& eg) {
  std::map<EdgeId, std::pair<EdgeId, EGNode>> out;
  for (const auto& [key, id] : eg.pair_edge) out[id] = key;
  return out;
}

std::vector<Path> accepted_paths(const EGData& eg, std::size_t max_len) {
  const Structure& h = *eg.graph;
  std::vector<Path> out;
  for (Vertex v = 0; v < eg.vertex_node.size(); ++v) {
    if (!eg.accepted_source(v)) continue;
    for (Path& p : enumerate_paths(h, v, max_len)) out.push_back(std::move(p));
  }
  return out;
}

// S_{n_1} ... S_{n_k} for the pair edges of gamma, in order.
GE pair_edge_product(const EGData& eg, const GeneratorMap<GE>& fam, const GraphAlgebra& alg,
                     const std::map<EdgeId, std::pair<EdgeId, EGNode>>& pairs, const Path& gamma,
                     bool& any) {
  const Structure& g = *eg.source;
  GE out;
  any = false;
  for (EdgeId e : gamma.edges) {
    auto it = pairs.find(e);
    if (it == pairs.end()) continue;
    EdgeId src = it->second.first;
    const GE& s = fam.edge_image(src, "s(" + g.edge(src).name + ")");
    out = any ? alg.mul(out, s) : s;
    any = true;
  }
  return out;
}

// t_{a_x} t_{a_x}^* written through the family: P_v, or the lglg expression for a word.
GE corner_unit(const EGData& eg, const GeneratorMap<GE>& fam, const GraphAlgebra& alg, const EGNode& x) {
  const Structure& g = *eg.source;
  if (!x.is_word) return fam.vertex_image(x.v, "p(" + g.vertex_name(x.v) + ")");
  using U = Unitized<GraphAlgebra>;
  U prod = u_one<GraphAlgebra>();
  for (std::size_t n = 1; n <= x.w.length(); ++n) {
    EdgeId e = static_cast<EdgeId>(n - 1);
    GE q = alg.mul(fam.ghost_image(e, "star(s(" + g.edge(e).name + "))"),
                   fam.edge_image(e, "s(" + g.edge(e).name + ")"));
    prod = u_mul(alg, prod, x.w.bit(n) ? u_lift<GraphAlgebra>(q) : u_complement(alg, q));
  }
  GE out = prod.body;
  for (Vertex v : short_sigma_vertices(eg, x.w)) out = alg.sub(out, fam.vertex_image(v, "p(" + g.vertex_name(v) + ")"));
  return out;
}

}  // namespace

Report suite_lci(std::shared_ptr<const Structure> g, const SuiteOptions& opts) {
  Report rep{"lci", g->name(), {}, {}};
  UltraAlgebra ultra(g, opts.ring);
  std::size_t n = std::min(opts.factors, g->edge_count());
  if (n == 0) rep.notes.push_back("no edges: nothing to multiply");
  for (std::size_t k = 1; k <= n; ++k) {
    std::string id = "n=" + std::to_string(k) + ":" + edge_list(*g, k);
    instance(rep, "ultragraph", id, [&] {
      std::vector<UE> ps;
      for (std::size_t i = 0; i < k; ++i) {
        EdgeId e = static_cast<EdgeId>(i);
        ps.push_back(ultra.mul(ultra.ghost(e), ultra.edge(e)));
      }
      return from_truth(lci_identity(ultra, ps), "expansion differs");
    });
  }
  ELAlgebra el(g, opts.ring);
  if (!el.complete()) {
    rep.notes.push_back("Exel-Laca comparison skipped: equality is not complete on this structure");
    return rep;
  }
  for (std::size_t k = 1; k <= n; ++k) {
    std::string id = "n=" + std::to_string(k) + ":" + edge_list(*g, k);
    instance(rep, "exel-laca", id, [&] {
      std::vector<ELAlgebra::Element> ps;
      for (std::size_t i = 0; i < k; ++i) ps.push_back(el.range_proj(static_cast<EdgeId>(i)));
      return from_truth(lci_identity(el, ps), "expansion differs");
    });
  }
  return rep;
}

Report suite_corth(const EGData& eg, const SuiteOptions& opts) {
  const Structure& g = *eg.source;
  Report rep{"corth", eg.graph->name(), {}, {}};
  GraphAlgebra alg(eg.graph, opts.ring);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& xs = eg.x_table[e];
    if (!eg.x_complete[e] || !eg.x_emitted[e])
      rep.notes.push_back("X(" + g.edge(e).name + ") is cut by the truncation");
    for (const EGNode& x : xs)
      for (const EGNode& y : xs) {
        std::string id = g.edge(e).name + ":" + eg.node_name(x) + "," + eg.node_name(y);
        instance(rep, x == y ? "diagonal" : "orthogonal", id, [&] {
          if (!eg.vertex_of(x) || !eg.vertex_of(y))
            throw Error(ErrorKind::NotReachable, "not reachable: node beyond the depth");
          Path ax = alpha_path(eg, x), ay = alpha_path(eg, y);
          GE lhs = alg.mul(alg.star(alg.path(ax)), alg.path(ay));
          GE rhs = x == y ? alg.vertex(*eg.vertex_of(x)) : alg.zero();
          bool ok = alg.equal(lhs, rhs);
          return std::pair{ok ? Status::Pass : Status::Fail, ok ? "" : alg.format(alg.normalize(lhs))};
        });
      }
  }
  return rep;
}

Report suite_lglg(const EGData& eg, const SuiteOptions& opts) {
  const Structure& g = *eg.source;
  Report rep{"lglg", eg.graph->name(), {}, {}};
  GraphAlgebra alg(eg.graph, opts.ring);
  auto fam = eg_family(eg, alg);
  std::size_t k = std::min(opts.word_length, eg.depth);
  if (k < opts.word_length) rep.notes.push_back("words limited to the depth " + std::to_string(eg.depth));
  for (const Word& w : eg.delta) {
    if (w.length() > k) continue;
    instance(rep, "lglg", w.bits, [&] {
      using U = Unitized<GraphAlgebra>;
      U lhs = u_one<GraphAlgebra>();
      for (std::size_t n = 1; n <= w.length(); ++n) {
        EdgeId e = static_cast<EdgeId>(n - 1);
        GE q = alg.mul(fam.ghost_image(e, "star(s(" + g.edge(e).name + "))"),
                       fam.edge_image(e, "s(" + g.edge(e).name + ")"));
        lhs = u_mul(alg, lhs, w.bit(n) ? u_lift<GraphAlgebra>(q) : u_complement(alg, q));
      }
      auto node = eg.vertex_of(EGNode::word(w));
      if (!node) throw Error(ErrorKind::NotReachable, "word " + w.bits + " is not reachable: beyond the depth");
      Path aw = alpha_path(eg, EGNode::word(w));
      GE rhs = alg.mono(aw, aw);
      for (Vertex v : short_sigma_vertices(eg, w))
        rhs = alg.add(rhs, fam.vertex_image(v, "p(" + g.vertex_name(v) + ")"));
      Truth t = u_equal(alg, lhs, u_lift<GraphAlgebra>(rhs));
      GE diff = alg.normalize(alg.sub(lhs.body, rhs));
      if (t == Truth::False && touches_frontier(alg, diff))
        return std::pair{Status::Skip, "frontier: " + alg.format(diff)};
      return from_truth(t, alg.format(diff) + " != 0");
    });
  }
  return rep;
}

Report suite_lglg2(const EGData& eg, const SuiteOptions& opts) {
  Report rep{"lglg2", eg.graph->name(), {}, {}};
  GraphAlgebra alg(eg.graph, opts.ring);
  auto fam = eg_family(eg, alg);
  auto pairs = pair_edges_by_id(eg);
  std::vector<Path> paths = accepted_paths(eg, opts.degree_bound + 1);
  std::mt19937_64 rng(opts.seed);
  std::shuffle(paths.begin(), paths.end(), rng);
  std::stable_partition(paths.begin(), paths.end(), [&](const Path& p) {
    return std::any_of(p.edges.begin(), p.edges.end(), [&](EdgeId e) { return pairs.count(e) != 0; });
  });
  if (paths.size() > opts.samples) paths.resize(opts.samples);
  for (const Path& gamma : paths) {
    instance(rep, "lglg2", eg.graph->path_name(gamma), [&] {
      Vertex end = eg.graph->end_vertex(gamma);
      Path tail = alpha_path(eg, eg.vertex_node.at(end));
      bool any = false;
      GE prod = pair_edge_product(eg, fam, alg, pairs, gamma, any);
      GE rhs = any ? alg.mul(prod, alg.path(tail)) : alg.path(tail);
      GE lhs = alg.path(gamma);
      GE diff = alg.normalize(alg.sub(lhs, rhs));
      if (diff.is_zero()) return std::pair{Status::Pass, std::string{}};
      if (touches_frontier(alg, diff)) return std::pair{Status::Skip, "frontier: " + alg.format(diff)};
      return std::pair{Status::Fail, alg.format(diff) + " != 0"};
    });
  }
  return rep;
}

Report suite_texlg(std::shared_ptr<const Structure> g, const SuiteOptions& opts) {
  Report rep{"texlg", g->name(), {}, {}};
  UltraAlgebra ultra(g, opts.ring);
  ELAlgebra el(g, opts.ring);
  // The images p_v, s_e in the ultragraph algebra form an Exel-Laca family.
  Report fwd = check_family(*g, el_to_ultra_family(ultra), ultra, Axioms::ExL);
  rep.merge(fwd);
  // Generators of the ultragraph algebra return to themselves through the Exel-Laca algebra.
  auto psi = ultra_to_el_family(el);
  auto phi = el_to_ultra_family(ultra);
  auto round_trip = [&](const std::string& id, const UE& x) {
    instance(rep, "round-trip", id, [&] {
      auto y = apply_hom(el, apply_hom(ultra, x, psi, el), phi, ultra);
      bool ok = ultra.equal(x, y);
      return std::pair{ok ? Status::Pass : Status::Fail, ok ? "" : ultra.format(ultra.sub(x, y)) + " != 0"};
    });
  };
  for (const VertexSet& a : sample_sets(*g)) round_trip("p(" + format_vertex_set(*g, a) + ")", ultra.proj(a));
  for (EdgeId e = 0; e < g->edge_count(); ++e) {
    round_trip("s(" + g->edge(e).name + ")", ultra.edge(e));
    round_trip("star(s(" + g->edge(e).name + "))", ultra.ghost(e));
  }
  // Degree is preserved by the map.
  for (EdgeId e = 0; e < g->edge_count(); ++e)
    instance(rep, "graded", g->edge(e).name, [&] {
      auto x = el.mul(el.edge(e), el.range_proj(e));
      auto comps = ultra.degree_components(apply_hom(el, x, phi, ultra));
      bool ok = comps.size() <= 1 && (comps.empty() || comps.begin()->first == 1);
      return std::pair{ok ? Status::Pass : Status::Fail, ok ? "" : "image leaves degree 1"};
    });
  return rep;
}

Report suite_tlgis_span(const EGData& eg, const SuiteOptions& opts) {
  const Structure& g = *eg.source;
  Report rep{"tlgis_span", eg.graph->name(), {}, {}};
  GraphAlgebra alg(eg.graph, opts.ring);
  auto fam = eg_family(eg, alg);
  auto pairs = pair_edges_by_id(eg);
  std::size_t d = opts.degree_bound;

  // Image inside the corner: products of at most d generators.
  std::vector<std::pair<std::string, std::function<GE()>>> gens;
  for (Vertex v : eg.window)
    gens.push_back({"P(" + g.vertex_name(v) + ")", [&, v] { return fam.vertex_image(v, "p(" + g.vertex_name(v) + ")"); }});
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::string n = g.edge(e).name;
    gens.push_back({"S(" + n + ")", [&, e, n] { return fam.edge_image(e, "s(" + n + ")"); }});
    gens.push_back({"S*(" + n + ")", [&, e, n] { return fam.ghost_image(e, "star(s(" + n + "))"); }});
  }
  std::mt19937_64 rng(opts.seed);
  std::vector<std::vector<std::size_t>> words;
  for (std::size_t i = 0; i < gens.size(); ++i) words.push_back({i});
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) words.push_back({i, j});
  if (!gens.empty())
    for (std::size_t s = 0; s < opts.samples; ++s) {
      std::vector<std::size_t> w(std::max<std::size_t>(d, 1));
      for (auto& x : w) x = std::uniform_int_distribution<std::size_t>(0, gens.size() - 1)(rng);
      words.push_back(w);
    }
  for (const auto& w : words) {
    std::string id;
    for (std::size_t i : w) id += (id.empty() ? "" : " ") + gens[i].first;
    instance(rep, "image-in-corner", id, [&] {
      GE x = gens[w[0]].second();
      for (std::size_t i = 1; i < w.size(); ++i) x = alg.mul(x, gens[w[i]].second());
      GE nx = alg.normalize(x);
      GE cx = corner_project(eg, alg, nx, Side::Both);
      bool ok = alg.equal(nx, cx);
      return std::pair{ok ? Status::Pass : Status::Fail, ok ? "" : alg.format(alg.sub(nx, cx)) + " outside the corner"};
    });
  }

  // Corner inside the image: t_a t_b^* with accepted sources, written through the family.
  std::vector<Path> paths = accepted_paths(eg, d);
  std::map<Vertex, std::vector<Path>> by_end;
  for (const Path& p : paths) by_end[eg.graph->end_vertex(p)].push_back(p);
  for (const auto& [x, ps] : by_end)
    for (const Path& a : ps)
      for (const Path& b : ps) {
        if (a.length() + b.length() > d) continue;
        std::string id = eg.graph->path_name(a) + " | " + eg.graph->path_name(b);
        instance(rep, "corner-in-image", id, [&] {
          GE target = alg.mono(a, b);
          bool any_a = false, any_b = false;
          GE sa = pair_edge_product(eg, fam, alg, pairs, a, any_a);
          GE sb = pair_edge_product(eg, fam, alg, pairs, b, any_b);
          GE y = corner_unit(eg, fam, alg, eg.vertex_node.at(x));
          if (any_a) y = alg.mul(sa, y);
          if (any_b) y = alg.mul(y, alg.star(sb));
          GE diff = alg.normalize(alg.sub(target, y));
          if (diff.is_zero()) return std::pair{Status::Pass, std::string{}};
          if (touches_frontier(alg, diff)) return std::pair{Status::Skip, "frontier: " + alg.format(diff)};
          return std::pair{Status::Fail, alg.format(diff) + " != 0"};
        });
      }
  return rep;
}

namespace {

std::pair<Status, std::string> compare_truths(Truth a, Truth b, const std::string& what) {
  if (a == Truth::Unknown || b == Truth::Unknown)
    return {Status::Skip, what + " undecided: " + to_string(a) + " vs " + to_string(b)};
  if (a == b) return {Status::Pass, {}};
  return {Status::Fail, what + ": " + to_string(a) + " vs " + to_string(b)};
}

}  // namespace

Report suite_transfer_L(std::shared_ptr<const Structure> g, const SuiteOptions& opts) {
  Report rep{"transfer_L", g->name(), {}, {}};
  instance(rep, "condition-L", "graph construction", [&] {
    EGData eg = build_EG(g, opts.eg);
    return compare_truths(condition_L(*g).result, condition_L(*eg.graph).result, "Condition (L)");
  });
  return rep;
}

Report suite_transfer_hs(std::shared_ptr<const Structure> g, const SuiteOptions& opts) {
  Report rep{"transfer_hs", g->name(), {}, {}};
  if (g->is_nat()) {
    rep.add("lattice", "graph construction", Status::Skip, "infinite universe");
    return rep;
  }
  if (!singular_vertices(*g).is_empty()) {
    rep.add("lattice", "graph construction", Status::Skip, "singular vertices present");
    return rep;
  }
  EGData eg = build_EG(g, opts.eg);
  instance(rep, "trivial", "graph construction", [&] {
    auto a = hereditary_saturated_subsets(*g);
    auto b = hereditary_saturated_subsets(*eg.graph);
    return compare_truths(truth_of(a.size() == 2), truth_of(b.size() == 2), "only trivial sets");
  });
  instance(rep, "count", "graph construction", [&] {
    auto a = hereditary_saturated_subsets(*g).size();
    auto b = hereditary_saturated_subsets(*eg.graph).size();
    if (a == b) return std::pair{Status::Pass, std::string{}};
    return std::pair{Status::Fail, std::to_string(a) + " vs " + std::to_string(b)};
  });
  return rep;
}

Report suite_desing_L(std::shared_ptr<const Structure> g, const SuiteOptions& opts) {
  Report rep{"desing_L", g->name(), {}, {}};
  instance(rep, "condition-L", "desingularization", [&] {
    DesingData d = desingularize(*g, opts.desing_depth);
    return compare_truths(condition_L(*g).result, condition_L(*d.graph).result, "Condition (L)");
  });
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lci",   "corth",     "lglg",       "lglg2",      "texlg",
                                              "tlgis_span", "transfer_L", "transfer_hs", "desing_L"};
  return names;
}

Report run_suite(const std::string& name, std::shared_ptr<const Structure> g, const SuiteOptions& opts) {
  if (name == "lci") return suite_lci(g, opts);
  if (name == "texlg") return suite_texlg(g, opts);
  if (name == "transfer_L") return suite_transfer_L(g, opts);
  if (name == "transfer_hs") return suite_transfer_hs(g, opts);
  if (name == "desing_L") return suite_desing_L(g, opts);
  EGData eg = build_EG(g, opts.eg);
  Report rep;
  if (name == "corth") rep = suite_corth(eg, opts);
  else if (name == "lglg") rep = suite_lglg(eg, opts);
  else if (name == "lglg2") rep = suite_lglg2(eg, opts);
  else if (name == "tlgis_span") rep = suite_tlgis_span(eg, opts);
  else throw Error(ErrorKind::InvalidStructure, "unknown suite " + name);
  for (const auto& w : eg.warnings) rep.notes.push_back(w);
  return rep;
}

}  // namespace lpa
