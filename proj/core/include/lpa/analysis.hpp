#pragma once

#include <string>
#include <vector>

#include "lpa/lin_comb.hpp"
#include "lpa/ring.hpp"
#include "lpa/structure.hpp"
#include "lpa/ultra_algebra.hpp"

namespace lpa {

struct Verdict {
  Truth result = Truth::Unknown;
  std::vector<std::string> witnesses;
};

// Standard: an edge leaving some s(e_i) other than e_i, a range r(e_i) with
// more than one vertex, or an infinite-emitter source. Literal: another edge
// at some s(e_i), or a sink inside some r(e_i).
enum class ExitRule { Standard, Literal };

// Every simple cycle has an exit. Unknown when a cycle without a decided exit
// passes a frontier vertex.
Verdict condition_L(const Structure& g, ExitRule rule = ExitRule::Standard);
bool cycle_has_exit(const Structure& g, const Path& cycle, ExitRule rule);

// Hereditary saturated families, each given by its union M: the family is
// every member of the set algebra inside M. Finite universes only.
std::vector<VertexSet> hereditary_saturated_subsets(const Structure& g, std::size_t max_vertices = 12);
bool is_hereditary(const Structure& g, const VertexSet& m);
bool is_saturated(const Structure& g, const VertexSet& m);

// Infinite emitters with finitely many but at least one declared edge whose range leaves M.
VertexSet breaking_vertices(const Structure& g, const VertexSet& m);

struct AdmissiblePair {
  VertexSet h;  // union of the hereditary saturated family
  VertexSet s;  // subset of the breaking vertices
};
std::vector<AdmissiblePair> admissible_pairs(const Structure& g);

// Graphs: finitely many vertices. Ultragraphs: the vertex set lies in the set algebra.
bool is_unital(const Structure& g);

// Condition (L) plus a trivial hereditary saturated lattice.
Verdict simplicity_verdict(const Structure& g, const Ring& ring);

// v with x p_v != 0, verified by the engine.
Vertex find_supporting_vertex(const UltraAlgebra& alg, const UltraAlgebra::Element& x);

// Splits a cycle into simple cycles: each returns to its base only at its last edge.
std::vector<std::vector<EdgeId>> simple_cycle_factors(const Structure& g, const std::vector<EdgeId>& cycle);

struct PinDown {
  enum class Kind { ScalarVertex, CyclePolynomial };
  Kind kind = Kind::ScalarVertex;
  UltraAlgebra::Element a, b, form;  // a x b == form
  Coef scalar;                       // ScalarVertex: form = scalar p_v
  Vertex v = 0;
  std::vector<EdgeId> cycle;         // CyclePolynomial: form = sum c_i s_cycle^i p_v
  std::vector<Coef> coeffs;
};

PinDown pin_down(const UltraAlgebra& alg, const UltraAlgebra::Element& x);

}  // namespace lpa
