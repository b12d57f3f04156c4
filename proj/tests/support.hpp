#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "lpa/dsl.hpp"
#include "lpa/families.hpp"
#include "lpa/graph_algebra.hpp"
#include "lpa/ultra_algebra.hpp"

namespace lpa::test {

inline std::string fixture_path(const std::string& name) {
  return std::string(LPA_TEST_DATA_DIR) + "/fixtures/" + name;
}
inline std::string golden_path(const std::string& name) {
  return std::string(LPA_TEST_DATA_DIR) + "/golden/" + name;
}

inline std::shared_ptr<Structure> parse_one(const std::string& text) {
  return build(parse_document(text).structures.at(0));
}

inline Coef random_coef(std::mt19937_64& rng) {
  int c = std::uniform_int_distribution<int>(-3, 3)(rng);
  return Coef(c == 0 ? 1 : c);
}

// Paths of length at most max_len from every source, the trivial ones included.
inline std::vector<Path> short_paths(const Structure& g, std::size_t max_len) {
  std::vector<Path> out;
  std::vector<Vertex> starts = g.is_nat() ? g.mentioned_vertices() : g.finite_vertices();
  for (Vertex v : starts)
    for (const Path& p : enumerate_paths(g, v, max_len)) out.push_back(p);
  return out;
}

// Sum of random s_a p_A s_b^* terms; may reduce to zero.
inline UltraAlgebra::Element random_ultra(const UltraAlgebra& alg, std::mt19937_64& rng,
                                          std::size_t max_terms = 3, std::size_t max_len = 2) {
  const Structure& g = alg.structure();
  auto paths = short_paths(g, max_len);
  auto sets = sample_sets(g);
  std::vector<std::vector<EdgeId>> edge_paths;
  for (const Path& p : paths) edge_paths.push_back(p.edges);
  auto pick = [&](const auto& xs) -> const auto& {
    return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
  };
  UltraAlgebra::Element x;
  std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_terms)(rng);
  for (std::size_t i = 0; i < n; ++i) {
    UMono m{pick(edge_paths), pick(sets), pick(edge_paths)};
    if (m.set.is_empty()) m.set = g.single(pick(paths).start);
    x = alg.add(x, alg.term(m, random_coef(rng)));
  }
  return x;
}

}  // namespace lpa::test

namespace lpa::test {

// Random declaration exercising every DSL feature; references may dangle,
// which printing and parsing do not care about.
inline StructureDecl random_decl(std::mt19937_64& rng, std::size_t id) {
  auto uni = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  auto name = [&](char prefix) {
    static const char* tails[] = {"", "_", "x", "1", "_a2", "Z9"};
    return std::string(1, prefix) + tails[uni(0, 5)] + std::to_string(uni(0, 20));
  };
  StructureDecl s;
  s.kind = uni(0, 1) ? Kind::Graph : Kind::Ultragraph;
  s.name = "S" + std::to_string(id);
  s.nat = uni(0, 1);
  s.universe_written = s.nat || uni(0, 1);
  for (std::size_t i = 0, n = uni(0, 5); i < n; ++i) {
    VertexDecl v{name('v'), std::nullopt};
    if (s.nat && uni(0, 2) == 0) v.index = static_cast<Vertex>(uni(0, 99));
    s.vertices.push_back(v);
  }
  for (std::size_t i = 0, n = uni(0, 2); i < n; ++i) s.infinite.push_back(name('v'));
  for (std::size_t i = 0, n = uni(0, 1); i < n; ++i) s.frontier.push_back(name('v'));
  for (std::size_t i = 0, n = uni(0, 5); i < n; ++i) {
    EdgeDecl e{name('e'), name('v'), {}};
    std::size_t k = s.kind == Kind::Graph ? 0 : uni(0, 2);
    e.target.kind = static_cast<TargetDecl::Kind>(k);
    std::size_t ids = k == 0 ? 1 : k == 1 ? uni(1, 3) : uni(0, 3);
    for (std::size_t j = 0; j < ids; ++j) e.target.ids.push_back(name('v'));
    s.edges.push_back(e);
  }
  for (std::size_t i = 0, n = uni(0, 3); i < n; ++i) {
    std::string bits;
    for (std::size_t j = 0, len = uni(1, 6); j < len; ++j) bits += uni(0, 1) ? '1' : '0';
    s.sigma.emplace_back(name('v'), bits);
  }
  return s;
}

inline Document random_document(std::mt19937_64& rng) {
  Document d;
  std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  for (std::size_t i = 0; i < n; ++i) d.structures.push_back(random_decl(rng, i));
  return d;
}

}  // namespace lpa::test
