#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "lpa/graph_algebra.hpp"
#include "lpa/lin_comb.hpp"
#include "lpa/structure.hpp"

namespace lpa {

// s_alpha p_A s_beta^* with A inside r(alpha) and r(beta).
struct UMono {
  std::vector<EdgeId> alpha;
  VertexSet set;
  std::vector<EdgeId> beta;
  auto operator<=>(const UMono&) const = default;
  bool operator==(const UMono&) const = default;
};

long degree(const UMono& m);

// Finite graph model of the vertices an element can see. Vertices outside
// the mentioned set behave identically, so one extra vertex stands for them.
struct CollapsedModel {
  std::vector<Vertex> kept;    // original vertex per model index, except the rest vertex
  bool has_rest = false;       // model index kept.size() is the rest vertex
  std::shared_ptr<const Structure> graph;
  std::unique_ptr<GraphAlgebra> algebra;
  std::map<std::pair<EdgeId, std::uint32_t>, EdgeId> edge_to;  // (edge, model vertex) -> graph edge

  std::vector<std::uint32_t> collapse(const VertexSet& a) const;
  std::uint32_t index(Vertex v) const;
};

class UltraAlgebra {
 public:
  using Mono = UMono;
  using Element = LinComb<UMono>;

  UltraAlgebra(std::shared_ptr<const Structure> g, Ring ring);

  const Structure& structure() const { return *g_; }
  std::shared_ptr<const Structure> structure_ptr() const { return g_; }
  const Ring& ring() const { return ring_; }

  Element zero() const { return {}; }
  Element proj(const VertexSet& a) const;
  Element vertex(Vertex v) const { return proj(g_->single(v)); }
  Element edge(EdgeId e) const;
  Element ghost(EdgeId e) const;
  Element path(const Path& alpha) const;
  Element term(const Mono& m, const Coef& c = Coef(1)) const;

  Element add(const Element& a, const Element& b) const { return lin_add(a, b, ring_); }
  Element sub(const Element& a, const Element& b) const { return lin_sub(a, b, ring_); }
  Element scale(const Element& a, const Coef& r) const { return lin_scale(a, r, ring_); }
  Element mul(const Element& a, const Element& b) const;
  Element reduce(const Element& x) const;
  Element star(const Element& x) const;
  std::map<long, Element> degree_components(const Element& x) const;

  // Exact, via the collapsed graph model.
  bool equal(const Element& a, const Element& b) const;
  bool is_zero(const Element& a) const;
  // Image in the collapsed graph model (exposed for tests).
  GraphAlgebra::Element to_graph(const Element& x, const CollapsedModel& model) const;
  std::shared_ptr<CollapsedModel> model_for(const Element& x) const;

  std::optional<Mono> reduce_mono(Mono m) const;
  std::optional<Mono> mul_mono(const Mono& a, const Mono& b) const;
  VertexSet path_range(const std::vector<EdgeId>& p) const;
  Vertex path_source(const std::vector<EdgeId>& p) const { return g_->edge(p.front()).source; }
  std::string format(const Element& x) const;
  std::string format_mono(const Mono& m) const;
  std::string format_set(const VertexSet& a) const;

 private:
  std::shared_ptr<const Structure> g_;
  Ring ring_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<std::vector<Vertex>, bool>, std::shared_ptr<CollapsedModel>> cache_;
};

// Shared set rendering: v, {v w}, cofinite{v}.
std::string format_vertex_set(const Structure& g, const VertexSet& a);

}  // namespace lpa
