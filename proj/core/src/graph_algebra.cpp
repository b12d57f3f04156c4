#include "lpa/graph_algebra.hpp"

#include <algorithm>

#include "lpa/errors.hpp"

namespace lpa {

std::string format_sum(const std::vector<std::pair<std::string, Coef>>& terms, const Ring& ring) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [body, c] : terms) {
    bool neg = ring.is_negative(c);
    Coef mag = neg ? Coef(-c) : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != 1) out += ring.format(mag) + " * ";
    out += body;
    first = false;
  }
  return out;
}

long degree(const GraphMono& m) {
  return static_cast<long>(m.alpha.size()) - static_cast<long>(m.beta.size());
}

GraphAlgebra::GraphAlgebra(std::shared_ptr<const Structure> g, Ring ring)
    : g_(std::move(g)), ring_(ring) {
  for (const Edge& e : g_->edges())
    if (e.range.is_cofinite() || e.range.items().size() != 1)
      throw Error(ErrorKind::EngineMismatch, "graph engine needs single-target edges");
}

GraphAlgebra::Element GraphAlgebra::term(const Mono& m, const Coef& c) const {
  Element x;
  add_term(x, m, c, ring_);
  return x;
}

GraphAlgebra::Element GraphAlgebra::vertex(Vertex v) const { return term(Mono{{}, {}, v}); }

GraphAlgebra::Element GraphAlgebra::edge(EdgeId e) const {
  return term(Mono{{e}, {}, g_->target(e)});
}

GraphAlgebra::Element GraphAlgebra::ghost(EdgeId e) const {
  return term(Mono{{}, {e}, g_->target(e)});
}

GraphAlgebra::Element GraphAlgebra::mono(const Path& alpha, const Path& beta) const {
  if (!g_->composable(alpha) || !g_->composable(beta)) return {};
  Vertex ra = g_->end_vertex(alpha), rb = g_->end_vertex(beta);
  if (ra != rb) return {};
  return normalize(term(Mono{alpha.edges, beta.edges, ra}));
}

std::optional<EdgeId> GraphAlgebra::special_edge(Vertex v) const {
  if (!g_->is_regular(v)) return std::nullopt;
  return g_->out_edges(v).front();
}

Vertex GraphAlgebra::source_of(const Mono& m, bool left) const {
  const auto& p = left ? m.alpha : m.beta;
  return p.empty() ? m.v : g_->edge(p.front()).source;
}

std::optional<GraphMono> GraphAlgebra::mul_mono(const Mono& a, const Mono& b) const {
  // t_{a1} t_{b1^*} t_{a2} t_{b2^*}
  if (source_of(a, false) != source_of(b, true)) return std::nullopt;
  const auto& b1 = a.beta;
  const auto& a2 = b.alpha;
  if (a2.size() >= b1.size()) {
    if (!std::equal(b1.begin(), b1.end(), a2.begin())) return std::nullopt;
    Mono out{a.alpha, b.beta, b.v};
    out.alpha.insert(out.alpha.end(), a2.begin() + static_cast<long>(b1.size()), a2.end());
    return out;
  }
  if (!std::equal(a2.begin(), a2.end(), b1.begin())) return std::nullopt;
  Mono out{a.alpha, b.beta, a.v};
  out.beta.insert(out.beta.end(), b1.begin() + static_cast<long>(a2.size()), b1.end());
  return out;
}

GraphAlgebra::Element GraphAlgebra::mul(const Element& a, const Element& b) const {
  Element raw;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms)
      if (auto m = mul_mono(ma, mb)) add_term(raw, *m, ring_.mul(ca, cb), ring_);
  return normalize(raw);
}

GraphAlgebra::Element GraphAlgebra::normalize(const Element& x) const {
  Element out;
  std::vector<std::pair<Mono, Coef>> work(x.terms.begin(), x.terms.end());
  while (!work.empty()) {
    auto [m, c] = std::move(work.back());
    work.pop_back();
    bool reducible = false;
    if (!m.alpha.empty() && !m.beta.empty() && m.alpha.back() == m.beta.back()) {
      EdgeId g = m.alpha.back();
      Vertex w = g_->edge(g).source;
      auto special = special_edge(w);
      reducible = special && *special == g;
    }
    if (!reducible) {
      add_term(out, m, c, ring_);
      continue;
    }
    // t_{a g} t_{(b g)^*} = t_a t_{b^*} - sum over other f from w of t_{a f} t_{(b f)^*}
    EdgeId g = m.alpha.back();
    Vertex w = g_->edge(g).source;
    Mono head{m.alpha, m.beta, w};
    head.alpha.pop_back();
    head.beta.pop_back();
    for (EdgeId f : g_->out_edges(w)) {
      if (f == g) continue;
      Mono side{head.alpha, head.beta, g_->target(f)};
      side.alpha.push_back(f);
      side.beta.push_back(f);
      work.emplace_back(std::move(side), ring_.neg(c));
    }
    work.emplace_back(std::move(head), c);
  }
  return out;
}

GraphAlgebra::Element GraphAlgebra::star(const Element& x) const {
  Element out;
  for (const auto& [m, c] : x.terms) add_term(out, Mono{m.beta, m.alpha, m.v}, c, ring_);
  return out;
}

std::map<long, GraphAlgebra::Element> GraphAlgebra::degree_components(const Element& x) const {
  std::map<long, Element> out;
  for (const auto& [m, c] : x.terms) add_term(out[degree(m)], m, c, ring_);
  return out;
}

std::string GraphAlgebra::format_mono(const Mono& m) const {
  auto names = [&](const std::vector<EdgeId>& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + g_->edge(p[i]).name;
    return s;
  };
  if (m.alpha.empty() && m.beta.empty()) return "q(" + g_->vertex_name(m.v) + ")";
  if (m.beta.empty()) return "s(" + names(m.alpha) + ")";
  if (m.alpha.empty()) return "star(s(" + names(m.beta) + "))";
  return "s(" + names(m.alpha) + ") * star(s(" + names(m.beta) + "))";
}

std::string GraphAlgebra::format(const Element& x) const {
  std::vector<std::pair<std::string, Coef>> parts;
  for (const auto& [m, c] : x.terms) parts.emplace_back(format_mono(m), c);
  return format_sum(parts, ring_);
}

}  // namespace lpa
