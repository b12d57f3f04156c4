#include "lpa/set_algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lpa/errors.hpp"

namespace lpa {

namespace {

bool by_size_then_items(const VertexSet& a, const VertexSet& b) {
  if (a.items().size() != b.items().size()) return a.items().size() < b.items().size();
  return a.items() < b.items();
}

}  // namespace

bool SetAlgebraDescription::contains(const VertexSet& s) const {
  if (closure) return std::binary_search(closure->begin(), closure->end(), s, by_size_then_items);
  return s.is_finite() || admits_cofinite;
}

std::string SetAlgebraDescription::rule() const {
  if (closure) return "explicit closure of " + std::to_string(closure->size()) + " sets";
  return admits_cofinite ? "finite or cofinite" : "finite";
}

SetAlgebraDescription generate_G0(const Structure& g, std::size_t max_members) {
  SetAlgebraDescription d;
  for (const Edge& e : g.edges()) d.generators.push_back(e.range);
  if (g.is_nat()) {
    for (Vertex v : g.mentioned_vertices()) d.generators.push_back(g.single(v));
    d.admits_cofinite = g.has_cofinite_range();
    return d;
  }
  std::size_t n = g.vertex_count();
  for (Vertex v = 0; v < n; ++v) d.generators.push_back(g.single(v));
  // Atoms are the membership classes; singleton generators make them singletons.
  std::map<std::vector<bool>, std::vector<Vertex>> classes;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<bool> key;
    for (const VertexSet& gen : d.generators) key.push_back(gen.contains(v));
    classes[key].push_back(v);
  }
  std::vector<std::vector<Vertex>> atoms;
  for (auto& [key, members] : classes)
    if (std::find(key.begin(), key.end(), true) != key.end()) atoms.push_back(members);
  if (atoms.size() >= 63 || (std::size_t{1} << atoms.size()) > max_members)
    throw Error(ErrorKind::TooLarge, "set algebra has 2^" + std::to_string(atoms.size()) + " members");
  std::vector<VertexSet> all;
  for (std::size_t mask = 0; mask < (std::size_t{1} << atoms.size()); ++mask) {
    std::vector<Vertex> items;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (mask >> i & 1) items.insert(items.end(), atoms[i].begin(), atoms[i].end());
    all.push_back(VertexSet::of(g.universe(), items));
  }
  std::sort(all.begin(), all.end(), by_size_then_items);
  d.closure = std::move(all);
  return d;
}

std::vector<VertexSet> closure_fixpoint(const std::vector<VertexSet>& generators, Universe u) {
  std::set<VertexSet> seen(generators.begin(), generators.end());
  seen.insert(VertexSet::empty(u));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<VertexSet> cur(seen.begin(), seen.end());
    for (const VertexSet& a : cur)
      for (const VertexSet& b : cur)
        for (VertexSet c : {a.unite(b), a.intersect(b), a.minus(b)})
          if (seen.insert(c).second) grew = true;
  }
  std::vector<VertexSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), by_size_then_items);
  return out;
}

VertexSet r_lambda_mu(const Structure& g, const std::vector<EdgeId>& lambda,
                      const std::vector<EdgeId>& mu) {
  if (lambda.empty()) throw Error(ErrorKind::InvalidStructure, "r(lambda, mu) needs lambda nonempty");
  VertexSet out = g.full_set();
  for (EdgeId e : lambda) out = out.intersect(g.edge(e).range);
  for (EdgeId f : mu) out = out.minus(g.edge(f).range);
  return out;
}

}  // namespace lpa
