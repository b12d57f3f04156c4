#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lpa {

using Vertex = std::uint32_t;

// Ambient vertex universe: finitely many indices 0..size-1, or all naturals.
struct Universe {
  bool nat = false;
  std::size_t size = 0;

  static Universe finite(std::size_t n) { return {false, n}; }
  static Universe naturals() { return {true, 0}; }
  auto operator<=>(const Universe&) const = default;
};

enum class SizeClass { Finite, Infinite };

// A finite or cofinite subset of a universe, stored canonically.
class VertexSet {
 public:
  VertexSet() = default;
  static VertexSet empty(Universe u) { return VertexSet(u, false, {}); }
  static VertexSet full(Universe u);
  static VertexSet single(Universe u, Vertex v) { return VertexSet(u, false, {v}); }
  static VertexSet of(Universe u, std::vector<Vertex> items);
  static VertexSet cofinite_of(Universe u, std::vector<Vertex> excluded);

  const Universe& universe() const { return universe_; }
  bool is_cofinite() const { return cofinite_; }
  // Members when finite, excluded vertices when cofinite.
  const std::vector<Vertex>& items() const { return items_; }

  bool is_empty() const { return !cofinite_ && items_.empty(); }
  bool is_finite() const { return !cofinite_; }
  SizeClass size_class() const { return cofinite_ ? SizeClass::Infinite : SizeClass::Finite; }
  // Cardinality of a finite set.
  std::size_t size() const;
  bool contains(Vertex v) const;
  bool subset_of(const VertexSet& o) const;

  VertexSet unite(const VertexSet& o) const;
  VertexSet intersect(const VertexSet& o) const;
  VertexSet minus(const VertexSet& o) const;
  VertexSet complement() const;

  // Finite members; callers guarantee finiteness.
  std::vector<Vertex> members() const;

  auto operator<=>(const VertexSet&) const = default;
  bool operator==(const VertexSet&) const = default;

 private:
  VertexSet(Universe u, bool cof, std::vector<Vertex> items);
  void check(const VertexSet& o) const;

  Universe universe_;
  bool cofinite_ = false;
  std::vector<Vertex> items_;
};

// Rewrites sets into pairwise disjoint pieces with equal prefix unions.
std::vector<VertexSet> disjointify(const std::vector<VertexSet>& sets);

}  // namespace lpa
