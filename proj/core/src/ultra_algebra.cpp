#include "lpa/ultra_algebra.hpp"

#include <algorithm>
#include <set>

#include "lpa/errors.hpp"

namespace lpa {

long degree(const UMono& m) {
  return static_cast<long>(m.alpha.size()) - static_cast<long>(m.beta.size());
}

std::string format_vertex_set(const Structure& g, const VertexSet& a) {
  auto list = [&](const std::vector<Vertex>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + g.vertex_name(vs[i]);
    return s;
  };
  if (a.is_cofinite()) return "cofinite{" + list(a.items()) + "}";
  if (a.items().size() == 1) return g.vertex_name(a.items().front());
  return "{" + list(a.items()) + "}";
}

std::uint32_t CollapsedModel::index(Vertex v) const {
  auto it = std::lower_bound(kept.begin(), kept.end(), v);
  if (it != kept.end() && *it == v) return static_cast<std::uint32_t>(it - kept.begin());
  if (!has_rest) throw Error(ErrorKind::EngineMismatch, "vertex outside collapsed model");
  return static_cast<std::uint32_t>(kept.size());
}

std::vector<std::uint32_t> CollapsedModel::collapse(const VertexSet& a) const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < kept.size(); ++i)
    if (a.contains(kept[i])) out.push_back(static_cast<std::uint32_t>(i));
  if (has_rest && a.is_cofinite()) out.push_back(static_cast<std::uint32_t>(kept.size()));
  return out;
}

UltraAlgebra::UltraAlgebra(std::shared_ptr<const Structure> g, Ring ring)
    : g_(std::move(g)), ring_(ring) {}

UltraAlgebra::Element UltraAlgebra::term(const Mono& m, const Coef& c) const {
  Element x;
  if (auto r = reduce_mono(m)) add_term(x, *r, c, ring_);
  return x;
}

UltraAlgebra::Element UltraAlgebra::proj(const VertexSet& a) const { return term(Mono{{}, a, {}}); }

UltraAlgebra::Element UltraAlgebra::edge(EdgeId e) const {
  return term(Mono{{e}, g_->edge(e).range, {}});
}

UltraAlgebra::Element UltraAlgebra::ghost(EdgeId e) const {
  return term(Mono{{}, g_->edge(e).range, {e}});
}

UltraAlgebra::Element UltraAlgebra::path(const Path& alpha) const {
  if (!g_->composable(alpha)) return {};
  if (alpha.edges.empty()) return vertex(alpha.start);
  return term(Mono{alpha.edges, g_->range_of(alpha), {}});
}

VertexSet UltraAlgebra::path_range(const std::vector<EdgeId>& p) const {
  return p.empty() ? g_->full_set() : g_->edge(p.back()).range;
}

std::optional<UMono> UltraAlgebra::reduce_mono(Mono m) const {
  m.set = m.set.intersect(path_range(m.alpha)).intersect(path_range(m.beta));
  if (m.set.is_empty()) return std::nullopt;
  return m;
}

std::optional<UMono> UltraAlgebra::mul_mono(const Mono& a, const Mono& b) const {
  const auto& beta = a.beta;
  const auto& gamma = b.alpha;
  if (gamma.size() >= beta.size() && std::equal(beta.begin(), beta.end(), gamma.begin())) {
    if (gamma.size() == beta.size())
      return reduce_mono(Mono{a.alpha, a.set.intersect(b.set), b.beta});
    Vertex head = g_->edge(gamma[beta.size()]).source;
    if (!a.set.contains(head)) return std::nullopt;
    Mono out{a.alpha, b.set, b.beta};
    out.alpha.insert(out.alpha.end(), gamma.begin() + static_cast<long>(beta.size()), gamma.end());
    return reduce_mono(std::move(out));
  }
  if (beta.size() > gamma.size() && std::equal(gamma.begin(), gamma.end(), beta.begin())) {
    Vertex head = g_->edge(beta[gamma.size()]).source;
    if (!b.set.contains(head)) return std::nullopt;
    Mono out{a.alpha, a.set, b.beta};
    out.beta.insert(out.beta.end(), beta.begin() + static_cast<long>(gamma.size()), beta.end());
    return reduce_mono(std::move(out));
  }
  return std::nullopt;
}

UltraAlgebra::Element UltraAlgebra::mul(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms)
      if (auto m = mul_mono(ma, mb)) add_term(out, *m, ring_.mul(ca, cb), ring_);
  return out;
}

UltraAlgebra::Element UltraAlgebra::reduce(const Element& x) const {
  Element out;
  for (const auto& [m, c] : x.terms)
    if (auto r = reduce_mono(m)) add_term(out, *r, c, ring_);
  return out;
}

UltraAlgebra::Element UltraAlgebra::star(const Element& x) const {
  Element out;
  for (const auto& [m, c] : x.terms) add_term(out, Mono{m.beta, m.set, m.alpha}, c, ring_);
  return out;
}

std::map<long, UltraAlgebra::Element> UltraAlgebra::degree_components(const Element& x) const {
  std::map<long, Element> out;
  for (const auto& [m, c] : x.terms) add_term(out[degree(m)], m, c, ring_);
  return out;
}

std::shared_ptr<CollapsedModel> UltraAlgebra::model_for(const Element& x) const {
  std::set<Vertex> kept_set;
  for (Vertex v : g_->mentioned_vertices()) kept_set.insert(v);
  bool rest = g_->is_nat() && g_->has_cofinite_range();
  for (const auto& [m, c] : x.terms) {
    for (Vertex v : m.set.items()) kept_set.insert(v);
    if (g_->is_nat() && m.set.is_cofinite()) rest = true;
  }
  if (!g_->is_nat()) {
    kept_set.clear();
    for (Vertex v : g_->finite_vertices()) kept_set.insert(v);
  }
  std::vector<Vertex> kept(kept_set.begin(), kept_set.end());
  auto key = std::make_pair(kept, rest);
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  auto model = std::make_shared<CollapsedModel>();
  model->kept = kept;
  model->has_rest = rest;
  std::vector<std::string> names;
  for (Vertex v : kept) names.push_back(g_->vertex_name(v));
  if (rest) names.push_back("_rest");
  auto graph = std::make_shared<Structure>(Structure::finite(g_->name() + "_model", Kind::Graph, names));
  for (EdgeId e = 0; e < g_->edge_count(); ++e) {
    const Edge& ed = g_->edge(e);
    std::uint32_t src = model->index(ed.source);
    for (std::uint32_t x : model->collapse(ed.range)) {
      EdgeId id = graph->add_graph_edge(ed.name + "@" + names[x], src, x);
      model->edge_to[{e, x}] = id;
    }
  }
  for (Vertex v : g_->infinite_flags()) graph->flag_infinite(model->index(v));
  for (Vertex v : g_->frontier_flags()) graph->flag_frontier(model->index(v));
  model->graph = graph;
  model->algebra = std::make_unique<GraphAlgebra>(graph, ring_);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  cache_.emplace(key, model);
  return model;
}

GraphAlgebra::Element UltraAlgebra::to_graph(const Element& x, const CollapsedModel& model) const {
  GraphAlgebra::Element out;
  auto lift = [&](const std::vector<EdgeId>& p, std::uint32_t end) {
    std::vector<EdgeId> q;
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::uint32_t at = i + 1 < p.size() ? model.index(g_->edge(p[i + 1]).source) : end;
      q.push_back(model.edge_to.at({p[i], at}));
    }
    return q;
  };
  for (const auto& [m, c] : x.terms)
    for (std::uint32_t v : model.collapse(m.set))
      add_term(out, GraphMono{lift(m.alpha, v), lift(m.beta, v), v}, c, ring_);
  return model.algebra->normalize(out);
}

bool UltraAlgebra::equal(const Element& a, const Element& b) const { return is_zero(sub(a, b)); }

bool UltraAlgebra::is_zero(const Element& a) const {
  if (a.is_zero()) return true;
  auto model = model_for(a);
  return to_graph(a, *model).is_zero();
}

std::string UltraAlgebra::format_set(const VertexSet& a) const { return format_vertex_set(*g_, a); }

std::string UltraAlgebra::format_mono(const Mono& m) const {
  auto names = [&](const std::vector<EdgeId>& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + g_->edge(p[i]).name;
    return s;
  };
  std::vector<std::string> parts;
  if (!m.alpha.empty()) parts.push_back("s(" + names(m.alpha) + ")");
  VertexSet implied = path_range(m.alpha).intersect(path_range(m.beta));
  if ((m.alpha.empty() && m.beta.empty()) || m.set != implied)
    parts.push_back("p(" + format_set(m.set) + ")");
  if (!m.beta.empty()) parts.push_back("star(s(" + names(m.beta) + "))");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " * " : "") + parts[i];
  return out;
}

std::string UltraAlgebra::format(const Element& x) const {
  std::vector<std::pair<std::string, Coef>> parts;
  for (const auto& [m, c] : x.terms) parts.emplace_back(format_mono(m), c);
  return format_sum(parts, ring_);
}

}  // namespace lpa
