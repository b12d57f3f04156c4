#pragma once

#include <string>
#include <vector>

#include "lpa/constructions.hpp"
#include "lpa/eg.hpp"
#include "lpa/el_algebra.hpp"
#include "lpa/generator_map.hpp"
#include "lpa/graph_algebra.hpp"
#include "lpa/report.hpp"
#include "lpa/ultra_algebra.hpp"

namespace lpa {

// Canonical generators of each engine.
GeneratorMap<GraphAlgebra::Element> graph_generators(const GraphAlgebra& alg);
GeneratorMap<UltraAlgebra::Element> ultra_generators(const UltraAlgebra& alg);
GeneratorMap<ELAlgebra::Element> el_generators(const ELAlgebra& alg);

// A graph read as an ultragraph: P_A = sum of q_v over A, S_e = t_e.
GeneratorMap<GraphAlgebra::Element> glugl_family(const GraphAlgebra& tgt);

// Finite case of the E_G identification. Forward: indexed by eg.graph,
// Q_v = p_v and T_(e,v) = s_e p_v. Inverse: indexed by the ultragraph.
GeneratorMap<UltraAlgebra::Element> gegiso_family(const EGData& eg, const UltraAlgebra& tgt);
GeneratorMap<GraphAlgebra::Element> gegiso_inverse(const EGData& eg, const GraphAlgebra& tgt);

// Exel-Laca generators to the ultragraph algebra (p_v -> p_v, s_e -> s_e).
GeneratorMap<UltraAlgebra::Element> el_to_ultra_family(const UltraAlgebra& tgt);
// Ultragraph generators to the Exel-Laca algebra; a cofinite p_A is written
// through a cofinite range projection corrected by finitely many vertices.
GeneratorMap<ELAlgebra::Element> ultra_to_el_family(const ELAlgebra& tgt);

// Exel-Laca family in L(E_G): P_v = t_{a_v} t_{a_v}^*, S_e a sum over X(e).
GeneratorMap<GraphAlgebra::Element> eg_family(const EGData& eg, const GraphAlgebra& tgt);

// Leavitt G_F-family in the Exel-Laca algebra; also the map pi_F.
GeneratorMap<ELAlgebra::Element> gf_family(const GFData& gf, const ELAlgebra& tgt);

// Ultragraph family in the desingularization: S_{e_i} = t_{f_1 .. f_{i-1} g_i}.
GeneratorMap<UltraAlgebra::Element> desing_family(const DesingData& d, const UltraAlgebra& tgt);

enum class Axioms { LP, uLP, ExL };

struct CheckOptions {
  std::vector<Vertex> vertices;    // empty: all vertices, or mentioned plus one fresh index
  std::vector<VertexSet> sets;     // empty: generated sample
  std::size_t el4_edges = 3;       // bound on |lambda| + |mu|
  bool el4 = true;
};

// Checks every axiom instance of `index`'s family rendered by m in tgt.
// Failures that touch a frontier vertex of the target are reported as skips.
Report check_family(const Structure& index, const GeneratorMap<GraphAlgebra::Element>& m,
                    const GraphAlgebra& tgt, Axioms ax, const CheckOptions& opts = {});
Report check_family(const Structure& index, const GeneratorMap<UltraAlgebra::Element>& m,
                    const UltraAlgebra& tgt, Axioms ax, const CheckOptions& opts = {});
Report check_family(const Structure& index, const GeneratorMap<ELAlgebra::Element>& m,
                    const ELAlgebra& tgt, Axioms ax, const CheckOptions& opts = {});

// Sample of set-algebra members used for uLP1.
std::vector<VertexSet> sample_sets(const Structure& g, std::size_t cap = 12);
// Vertices used for per-vertex axioms.
std::vector<Vertex> sample_vertices(const Structure& g);

// True when a term of x involves a frontier vertex of the engine's structure.
bool touches_frontier(const GraphAlgebra& alg, const GraphAlgebra::Element& x);
bool touches_frontier(const UltraAlgebra& alg, const UltraAlgebra::Element& x);
bool touches_frontier(const ELAlgebra& alg, const ELAlgebra::Element& x);

}  // namespace lpa
