#include "lpa/vertex_set.hpp"

#include <algorithm>
#include <iterator>

#include "lpa/errors.hpp"

namespace lpa {

namespace {

std::vector<Vertex> sorted_unique(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Vertex> set_union(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Vertex> set_inter(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Vertex> set_diff(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

VertexSet::VertexSet(Universe u, bool cof, std::vector<Vertex> items)
    : universe_(u), cofinite_(cof), items_(std::move(items)) {
  if (!universe_.nat) {
    for (Vertex v : items_)
      if (v >= universe_.size)
        throw Error(ErrorKind::UniverseMismatch, "vertex index outside finite universe");
    if (cofinite_) {
      std::vector<Vertex> all(universe_.size);
      for (std::size_t i = 0; i < universe_.size; ++i) all[i] = static_cast<Vertex>(i);
      items_ = set_diff(all, items_);
      cofinite_ = false;
    }
  }
}

VertexSet VertexSet::full(Universe u) { return VertexSet(u, true, {}); }

VertexSet VertexSet::of(Universe u, std::vector<Vertex> items) {
  return VertexSet(u, false, sorted_unique(std::move(items)));
}

VertexSet VertexSet::cofinite_of(Universe u, std::vector<Vertex> excluded) {
  return VertexSet(u, true, sorted_unique(std::move(excluded)));
}

void VertexSet::check(const VertexSet& o) const {
  if (universe_ != o.universe_)
    throw Error(ErrorKind::UniverseMismatch, "vertex sets from different universes");
}

std::size_t VertexSet::size() const {
  if (cofinite_) throw Error(ErrorKind::TruncationExceeded, "size of a cofinite set");
  return items_.size();
}

bool VertexSet::contains(Vertex v) const {
  bool listed = std::binary_search(items_.begin(), items_.end(), v);
  return cofinite_ ? !listed : listed;
}

bool VertexSet::subset_of(const VertexSet& o) const {
  check(o);
  return minus(o).is_empty();
}

VertexSet VertexSet::unite(const VertexSet& o) const {
  check(o);
  if (!cofinite_ && !o.cofinite_) return VertexSet(universe_, false, set_union(items_, o.items_));
  if (cofinite_ && o.cofinite_) return VertexSet(universe_, true, set_inter(items_, o.items_));
  const VertexSet& cof = cofinite_ ? *this : o;
  const VertexSet& fin = cofinite_ ? o : *this;
  return VertexSet(universe_, true, set_diff(cof.items_, fin.items_));
}

VertexSet VertexSet::intersect(const VertexSet& o) const {
  check(o);
  if (!cofinite_ && !o.cofinite_) return VertexSet(universe_, false, set_inter(items_, o.items_));
  if (cofinite_ && o.cofinite_) return VertexSet(universe_, true, set_union(items_, o.items_));
  const VertexSet& cof = cofinite_ ? *this : o;
  const VertexSet& fin = cofinite_ ? o : *this;
  return VertexSet(universe_, false, set_diff(fin.items_, cof.items_));
}

VertexSet VertexSet::minus(const VertexSet& o) const {
  check(o);
  return intersect(o.complement());
}

VertexSet VertexSet::complement() const {
  return VertexSet(universe_, !cofinite_, items_);
}

std::vector<Vertex> VertexSet::members() const {
  if (cofinite_) throw Error(ErrorKind::TruncationExceeded, "members of a cofinite set");
  return items_;
}

std::vector<VertexSet> disjointify(const std::vector<VertexSet>& sets) {
  std::vector<VertexSet> out;
  out.reserve(sets.size());
  if (sets.empty()) return out;
  VertexSet seen = VertexSet::empty(sets.front().universe());
  for (const VertexSet& b : sets) {
    out.push_back(b.minus(seen));
    seen = seen.unite(b);
  }
  return out;
}

}  // namespace lpa
