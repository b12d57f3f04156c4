#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lpa/structure.hpp"
#include "lpa/ultra_algebra.hpp"

namespace lpa {

// The finite graph attached to a finite edge set F. Vertices are the edges
// of F followed by the qualifying nonempty subsets X of F.
struct GFData {
  std::shared_ptr<const Structure> graph;
  std::vector<EdgeId> F;                        // sorted
  std::vector<std::vector<EdgeId>> subsets;     // X vertices, in vertex order after F
  std::map<EdgeId, Vertex> edge_vertex;         // e in F -> vertex
  std::map<std::vector<EdgeId>, Vertex> subset_vertex;
  std::map<std::pair<EdgeId, EdgeId>, EdgeId> pair_edge;                 // (e, f)
  std::map<std::pair<EdgeId, std::vector<EdgeId>>, EdgeId> subset_edge;  // (e, X)
};

GFData build_GF(const Structure& g, std::vector<EdgeId> F);

// Tails at sinks and at vertices flagged as infinite emitters.
struct DesingData {
  std::shared_ptr<const Structure> graph;
  VertexSet frontier;
  std::vector<std::string> warnings;
  std::map<Vertex, std::vector<Vertex>> tails;      // base vertex -> tail vertices
  std::vector<std::vector<EdgeId>> edge_route;      // source edge -> path in graph
  Vertex shift_from = 0;  // Nat mode: unmentioned indices from here move up
  Vertex shift_by = 0;

  Vertex map_vertex(Vertex v) const { return v >= shift_from ? v + shift_by : v; }
  VertexSet map_set(const VertexSet& a) const;
};

// Tail length is max(depth, declared out-edges) at each tailed vertex.
DesingData desingularize(const Structure& g, std::size_t depth);

// Enumeration B_1, B_2, ... of members of the set algebra: the whole closure
// in a finite universe, otherwise the ranges followed by singletons.
std::vector<VertexSet> sigma_unit_sequence(const Structure& g, std::size_t count);
// t_k: the sum of p over the disjointified first k sets.
UltraAlgebra::Element sigma_unit(const UltraAlgebra& alg, std::size_t k);

}  // namespace lpa
