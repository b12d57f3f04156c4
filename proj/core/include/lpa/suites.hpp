#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lpa/eg.hpp"
#include "lpa/report.hpp"
#include "lpa/ring.hpp"
#include "lpa/structure.hpp"

namespace lpa {

struct SuiteOptions {
  Ring ring = Ring::rationals();
  EGOptions eg;
  std::size_t factors = 4;       // lci: idempotents multiplied together
  std::size_t word_length = 3;   // lglg: longest word checked
  std::size_t samples = 20;      // lglg2 and tlgis_span: sampled paths or products
  std::size_t degree_bound = 3;  // tlgis_span: path lengths and product lengths
  std::size_t desing_depth = 3;
  std::uint64_t seed = 1;
};

// Expansion of 1 - prod(1 - P_i) over commuting range projections.
Report suite_lci(std::shared_ptr<const Structure> g, const SuiteOptions& opts = {});
// t_{a_x}^* t_{a_y} = 0 for distinct x, y in X(e).
Report suite_corth(const EGData& eg, const SuiteOptions& opts = {});
// Products of S_e^* S_e and (1 - S_e^* S_e) along a word in Delta.
Report suite_lglg(const EGData& eg, const SuiteOptions& opts = {});
// t_gamma = S_{n_1} ... S_{n_k} t_{a_r(gamma)} on sampled paths.
Report suite_lglg2(const EGData& eg, const SuiteOptions& opts = {});
// Generator transport between the Exel-Laca and ultragraph algebras.
Report suite_texlg(std::shared_ptr<const Structure> g, const SuiteOptions& opts = {});
// Bounded double inclusion of the family's image and the corner Q L Q.
Report suite_tlgis_span(const EGData& eg, const SuiteOptions& opts = {});
// Condition (L) agrees on the ultragraph and its graph.
Report suite_transfer_L(std::shared_ptr<const Structure> g, const SuiteOptions& opts = {});
// Trivial hereditary saturated lattices agree on the ultragraph and its graph.
Report suite_transfer_hs(std::shared_ptr<const Structure> g, const SuiteOptions& opts = {});
// Condition (L) agrees on the ultragraph and its desingularization.
Report suite_desing_L(std::shared_ptr<const Structure> g, const SuiteOptions& opts = {});

// Window vertices of r(w) whose sigma is shorter than w.
std::vector<Vertex> short_sigma_vertices(const EGData& eg, const Word& w);

const std::vector<std::string>& suite_names();
// Dispatch by name; builds the graph construction when the suite needs it.
Report run_suite(const std::string& name, std::shared_ptr<const Structure> g,
                 const SuiteOptions& opts = {});

}  // namespace lpa
