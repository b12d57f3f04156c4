#pragma once

#include <memory>
#include <string>

#include "lpa/dsl.hpp"
#include "lpa/graph_algebra.hpp"
#include "lpa/ring.hpp"
#include "lpa/structure.hpp"
#include "lpa/ultra_algebra.hpp"

namespace lpa {

// Expression grammar, sums of products of atoms:
//   s(e f ...)  star(s(e f ...))  p(v | {v w} | cofinite{v})  q(v)  INT
// Unknown names throw MissingGeneratorAssignment; syntax errors throw ParseError
// with line 1 and the column of the offending character.
GraphAlgebra::Element parse_graph_expr(const GraphAlgebra& alg, const std::string& expr);
UltraAlgebra::Element parse_ultra_expr(const UltraAlgebra& alg, const std::string& expr);

// Normal form (graphs) or reduced form (ultragraphs), printed.
std::string eval_expr(std::shared_ptr<const Structure> g, const Ring& ring, const std::string& expr);
std::string eval_expr(const Document& doc, const std::string& structure, const Ring& ring,
                      const std::string& expr);

}  // namespace lpa
