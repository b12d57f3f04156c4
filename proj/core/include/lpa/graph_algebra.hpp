#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lpa/lin_comb.hpp"
#include "lpa/structure.hpp"

namespace lpa {

// t_alpha t_beta^* with r(alpha) = r(beta) = v; both empty means q_v.
struct GraphMono {
  std::vector<EdgeId> alpha;
  std::vector<EdgeId> beta;
  Vertex v = 0;
  auto operator<=>(const GraphMono&) const = default;
  bool operator==(const GraphMono&) const = default;
};

// Leavitt path algebra of a graph, with normal forms over the basis that
// excludes t_{a g} t_{(b g)^*} for the lowest-index edge g at each regular vertex.
class GraphAlgebra {
 public:
  using Mono = GraphMono;
  using Element = LinComb<GraphMono>;

  GraphAlgebra(std::shared_ptr<const Structure> g, Ring ring);

  const Structure& structure() const { return *g_; }
  std::shared_ptr<const Structure> structure_ptr() const { return g_; }
  const Ring& ring() const { return ring_; }

  Element zero() const { return {}; }
  Element vertex(Vertex v) const;
  Element edge(EdgeId e) const;
  Element ghost(EdgeId e) const;
  // t_alpha t_beta^*; zero when the ends differ or a path does not compose.
  Element mono(const Path& alpha, const Path& beta) const;
  Element path(const Path& alpha) const { return mono(alpha, Path{structure().end_vertex(alpha), {}}); }
  Element term(const Mono& m, const Coef& c = Coef(1)) const;

  Element add(const Element& a, const Element& b) const { return lin_add(a, b, ring_); }
  Element sub(const Element& a, const Element& b) const { return lin_sub(a, b, ring_); }
  Element scale(const Element& a, const Coef& r) const { return lin_scale(a, r, ring_); }
  Element mul(const Element& a, const Element& b) const;
  Element normalize(const Element& x) const;
  Element star(const Element& x) const;
  std::map<long, Element> degree_components(const Element& x) const;
  bool equal(const Element& a, const Element& b) const { return normalize(sub(a, b)).is_zero(); }
  bool is_zero(const Element& a) const { return normalize(a).is_zero(); }

  // Lowest-index out-edge of a regular vertex.
  std::optional<EdgeId> special_edge(Vertex v) const;
  Vertex source_of(const Mono& m, bool left) const;
  std::optional<Mono> mul_mono(const Mono& a, const Mono& b) const;
  std::string format(const Element& x) const;
  std::string format_mono(const Mono& m) const;

 private:
  std::shared_ptr<const Structure> g_;
  Ring ring_;
};

long degree(const GraphMono& m);

}  // namespace lpa
