#include "lpa/el_algebra.hpp"

#include <algorithm>

#include "lpa/errors.hpp"

namespace lpa {

long degree(const ELMono& m) {
  return static_cast<long>(m.alpha.size()) - static_cast<long>(m.beta.size());
}

ELAlgebra::ELAlgebra(std::shared_ptr<const Structure> g, Ring ring)
    : g_(g), ring_(ring), ultra_(g, ring) {
  complete_ = !g_->is_nat() && singular_vertices(*g_).is_empty();
}

VertexSet ELAlgebra::middle_set(const ELMiddle& mid) const {
  if (mid.kind == ELMiddle::Kind::Vertex) return g_->single(mid.v);
  VertexSet out = g_->full_set();
  for (EdgeId e : mid.edges) out = out.intersect(g_->edge(e).range);
  return out;
}

ELAlgebra::Element ELAlgebra::canon(const Mono& m, const Coef& c) const {
  Element out;
  if (m.mid.kind == ELMiddle::Kind::Vertex) {
    if (!m.alpha.empty() && !g_->edge(m.alpha.back()).range.contains(m.mid.v)) return out;
    if (!m.beta.empty() && !g_->edge(m.beta.back()).range.contains(m.mid.v)) return out;
    add_term(out, m, c, ring_);
    return out;
  }
  Mono r = m;
  if (!r.alpha.empty()) r.mid.edges.push_back(r.alpha.back());
  if (!r.beta.empty()) r.mid.edges.push_back(r.beta.back());
  std::sort(r.mid.edges.begin(), r.mid.edges.end());
  r.mid.edges.erase(std::unique(r.mid.edges.begin(), r.mid.edges.end()), r.mid.edges.end());
  if (r.mid.edges.empty())
    throw Error(ErrorKind::EngineMismatch, "empty range product stands for the adjoined unit");
  VertexSet inter = middle_set(r.mid);
  if (inter.is_empty()) return out;
  if (inter.is_finite()) {
    for (Vertex v : inter.items())
      add_term(out, Mono{r.alpha, ELMiddle{ELMiddle::Kind::Vertex, v, {}}, r.beta}, c, ring_);
    return out;
  }
  add_term(out, r, c, ring_);
  return out;
}

ELAlgebra::Element ELAlgebra::term(const Mono& m, const Coef& c) const { return canon(m, c); }

ELAlgebra::Element ELAlgebra::vertex(Vertex v) const {
  return term(Mono{{}, ELMiddle{ELMiddle::Kind::Vertex, v, {}}, {}});
}

ELAlgebra::Element ELAlgebra::edge(EdgeId e) const {
  return term(Mono{{e}, ELMiddle{ELMiddle::Kind::Ranges, 0, {e}}, {}});
}

ELAlgebra::Element ELAlgebra::ghost(EdgeId e) const {
  return term(Mono{{}, ELMiddle{ELMiddle::Kind::Ranges, 0, {e}}, {e}});
}

ELAlgebra::Element ELAlgebra::range_proj(EdgeId e) const {
  return term(Mono{{}, ELMiddle{ELMiddle::Kind::Ranges, 0, {e}}, {}});
}

std::optional<ELMono> ELAlgebra::mul_mono(const Mono& a, const Mono& b) const {
  const auto& beta = a.beta;
  const auto& gamma = b.alpha;
  if (gamma.size() == beta.size() && gamma == beta) {
    const ELMiddle& m = a.mid;
    const ELMiddle& n = b.mid;
    ELMiddle mid;
    using K = ELMiddle::Kind;
    if (m.kind == K::Vertex && n.kind == K::Vertex) {
      if (m.v != n.v) return std::nullopt;
      mid = m;
    } else if (m.kind == K::Vertex) {
      if (!middle_set(n).contains(m.v)) return std::nullopt;
      mid = m;
    } else if (n.kind == K::Vertex) {
      if (!middle_set(m).contains(n.v)) return std::nullopt;
      mid = n;
    } else {
      mid = m;
      mid.edges.insert(mid.edges.end(), n.edges.begin(), n.edges.end());
      std::sort(mid.edges.begin(), mid.edges.end());
      mid.edges.erase(std::unique(mid.edges.begin(), mid.edges.end()), mid.edges.end());
    }
    return Mono{a.alpha, mid, b.beta};
  }
  if (gamma.size() > beta.size() && std::equal(beta.begin(), beta.end(), gamma.begin())) {
    Vertex head = g_->edge(gamma[beta.size()]).source;
    if (!middle_set(a.mid).contains(head)) return std::nullopt;
    Mono out{a.alpha, b.mid, b.beta};
    out.alpha.insert(out.alpha.end(), gamma.begin() + static_cast<long>(beta.size()), gamma.end());
    return out;
  }
  if (beta.size() > gamma.size() && std::equal(gamma.begin(), gamma.end(), beta.begin())) {
    Vertex head = g_->edge(beta[gamma.size()]).source;
    if (!middle_set(b.mid).contains(head)) return std::nullopt;
    Mono out{a.alpha, a.mid, b.beta};
    out.beta.insert(out.beta.end(), beta.begin() + static_cast<long>(gamma.size()), beta.end());
    return out;
  }
  return std::nullopt;
}

ELAlgebra::Element ELAlgebra::mul(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      if (auto m = mul_mono(ma, mb))
        for (const auto& [mm, cc] : canon(*m, ring_.mul(ca, cb)).terms) add_term(out, mm, cc, ring_);
    }
  return out;
}

ELAlgebra::Element ELAlgebra::reduce(const Element& x) const {
  Element out;
  for (const auto& [m, c] : x.terms)
    for (const auto& [mm, cc] : canon(m, c).terms) add_term(out, mm, cc, ring_);
  return out;
}

ELAlgebra::Element ELAlgebra::star(const Element& x) const {
  Element out;
  for (const auto& [m, c] : x.terms) add_term(out, Mono{m.beta, m.mid, m.alpha}, c, ring_);
  return out;
}

std::map<long, ELAlgebra::Element> ELAlgebra::degree_components(const Element& x) const {
  std::map<long, Element> out;
  for (const auto& [m, c] : x.terms) add_term(out[degree(m)], m, c, ring_);
  return out;
}

UltraAlgebra::Element ELAlgebra::to_ultra(const Element& x) const {
  UltraAlgebra::Element out;
  for (const auto& [m, c] : x.terms)
    for (const auto& [um, uc] : ultra_.term(UMono{m.alpha, middle_set(m.mid), m.beta}, c).terms)
      add_term(out, um, uc, ring_);
  return out;
}

Truth ELAlgebra::equal(const Element& a, const Element& b) const {
  Element d = reduce(sub(a, b));
  if (d.is_zero()) return Truth::True;
  if (!ultra_.is_zero(to_ultra(d))) return Truth::False;
  return complete_ ? Truth::True : Truth::Unknown;
}

std::string ELAlgebra::format_mono(const Mono& m) const {
  auto names = [&](const std::vector<EdgeId>& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + g_->edge(p[i]).name;
    return s;
  };
  std::vector<std::string> parts;
  if (!m.alpha.empty()) parts.push_back("s(" + names(m.alpha) + ")");
  if (m.mid.kind == ELMiddle::Kind::Vertex) {
    parts.push_back("p(" + g_->vertex_name(m.mid.v) + ")");
  } else {
    for (EdgeId e : m.mid.edges) {
      bool implied = (!m.alpha.empty() && m.alpha.back() == e) || (!m.beta.empty() && m.beta.back() == e);
      if (!implied) parts.push_back("star(s(" + g_->edge(e).name + ")) * s(" + g_->edge(e).name + ")");
    }
  }
  if (!m.beta.empty()) parts.push_back("star(s(" + names(m.beta) + "))");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " * " : "") + parts[i];
  return out;
}

std::string ELAlgebra::format(const Element& x) const {
  std::vector<std::pair<std::string, Coef>> parts;
  for (const auto& [m, c] : x.terms) parts.emplace_back(format_mono(m), c);
  return format_sum(parts, ring_);
}

}  // namespace lpa
