#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpa/structure.hpp"

namespace lpa {

// The Boolean ring generated by singletons and edge ranges.
struct SetAlgebraDescription {
  std::vector<VertexSet> generators;
  // Finite universes: every member, ordered by (size, items).
  std::optional<std::vector<VertexSet>> closure;
  // Nat universes: cofinite sets belong iff some range is cofinite.
  bool admits_cofinite = false;

  bool contains(const VertexSet& s) const;
  std::string rule() const;
};

SetAlgebraDescription generate_G0(const Structure& g, std::size_t max_members = 1u << 16);

// Naive fixpoint closure under union, intersection and difference (test oracle).
std::vector<VertexSet> closure_fixpoint(const std::vector<VertexSet>& generators, Universe u);

VertexSet r_lambda_mu(const Structure& g, const std::vector<EdgeId>& lambda,
                      const std::vector<EdgeId>& mu);

}  // namespace lpa
