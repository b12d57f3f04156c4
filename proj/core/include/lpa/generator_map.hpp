#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpa/el_algebra.hpp"
#include "lpa/errors.hpp"
#include "lpa/graph_algebra.hpp"
#include "lpa/ultra_algebra.hpp"

namespace lpa {

// Images of source generators in a target algebra. Unassigned generators keep
// the reason they could not be built, so apply_hom can report it.
template <class T>
struct GeneratorMap {
  std::string name;
  std::map<Vertex, T> vertex_images;
  std::function<T(Vertex)> vertex_fallback;      // vertices outside vertex_images
  std::function<T(const VertexSet&)> set_image;  // ultragraph sources
  std::vector<std::optional<T>> edge_images;
  std::vector<std::optional<T>> ghost_images;
  std::map<std::string, std::string> missing;  // generator -> reason
  T zero{};

  T vertex_image(Vertex v, const std::string& label) const {
    auto it = vertex_images.find(v);
    if (it != vertex_images.end()) return it->second;
    if (vertex_fallback) return vertex_fallback(v);
    fail(label);
  }
  const T& edge_image(EdgeId e, const std::string& label) const {
    if (e >= edge_images.size() || !edge_images[e]) fail(label);
    return *edge_images[e];
  }
  const T& ghost_image(EdgeId e, const std::string& label) const {
    if (e >= ghost_images.size() || !ghost_images[e]) fail(label);
    return *ghost_images[e];
  }
  [[noreturn]] void fail(const std::string& label) const {
    auto it = missing.find(label);
    if (it != missing.end() && it->second.find("not reachable") != std::string::npos)
      throw Error(ErrorKind::NotReachable, name + ": " + label + ": " + it->second);
    throw Error(ErrorKind::MissingGeneratorAssignment,
                name + ": no image for " + label + (it == missing.end() ? "" : ": " + it->second));
  }
};

namespace detail {

template <class Tgt>
typename Tgt::Element chain(const Tgt& tgt, const GeneratorMap<typename Tgt::Element>& m,
                            const Structure& src, const std::vector<EdgeId>& alpha,
                            const typename Tgt::Element& middle, const std::vector<EdgeId>& beta) {
  typename Tgt::Element out = middle;
  for (auto it = alpha.rbegin(); it != alpha.rend(); ++it)
    out = tgt.mul(m.edge_image(*it, "s(" + src.edge(*it).name + ")"), out);
  for (auto it = beta.rbegin(); it != beta.rend(); ++it)
    out = tgt.mul(out, m.ghost_image(*it, "star(s(" + src.edge(*it).name + "))"));
  return out;
}

}  // namespace detail

template <class Tgt>
typename Tgt::Element apply_hom(const GraphAlgebra& src, const GraphAlgebra::Element& x,
                                const GeneratorMap<typename Tgt::Element>& m, const Tgt& tgt) {
  typename Tgt::Element out = tgt.zero();
  const Structure& g = src.structure();
  for (const auto& [mono, c] : x.terms) {
    auto mid = m.vertex_image(mono.v, "q(" + g.vertex_name(mono.v) + ")");
    out = tgt.add(out, tgt.scale(detail::chain(tgt, m, g, mono.alpha, mid, mono.beta), c));
  }
  return out;
}

template <class Tgt>
typename Tgt::Element apply_hom(const UltraAlgebra& src, const UltraAlgebra::Element& x,
                                const GeneratorMap<typename Tgt::Element>& m, const Tgt& tgt) {
  typename Tgt::Element out = tgt.zero();
  const Structure& g = src.structure();
  for (const auto& [mono, c] : x.terms) {
    if (!m.set_image) m.fail("p(" + format_vertex_set(g, mono.set) + ")");
    auto mid = m.set_image(mono.set);
    out = tgt.add(out, tgt.scale(detail::chain(tgt, m, g, mono.alpha, mid, mono.beta), c));
  }
  return out;
}

template <class Tgt>
typename Tgt::Element apply_hom(const ELAlgebra& src, const ELAlgebra::Element& x,
                                const GeneratorMap<typename Tgt::Element>& m, const Tgt& tgt) {
  typename Tgt::Element out = tgt.zero();
  const Structure& g = src.structure();
  for (const auto& [mono, c] : x.terms) {
    typename Tgt::Element mid;
    if (mono.mid.kind == ELMiddle::Kind::Vertex) {
      mid = m.vertex_image(mono.mid.v, "p(" + g.vertex_name(mono.mid.v) + ")");
    } else {
      bool first = true;
      for (EdgeId e : mono.mid.edges) {
        auto q = tgt.mul(m.ghost_image(e, "star(s(" + g.edge(e).name + "))"),
                         m.edge_image(e, "s(" + g.edge(e).name + ")"));
        mid = first ? q : tgt.mul(mid, q);
        first = false;
      }
    }
    out = tgt.add(out, tgt.scale(detail::chain(tgt, m, g, mono.alpha, mid, mono.beta), c));
  }
  return out;
}

}  // namespace lpa
