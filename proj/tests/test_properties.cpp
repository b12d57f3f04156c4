#include <doctest.h>

#include <random>

#include "lpa/dsl.hpp"
#include "lpa/random_structures.hpp"
#include "lpa/set_algebra.hpp"
#include "support.hpp"

using namespace lpa;

TEST_CASE("print then parse is the identity on random documents") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    Document d = test::random_document(rng);
    std::string text = print_document(d);
    CAPTURE(text);
    CHECK(parse_document(text) == d);
  }
}

TEST_CASE("vertex set operations agree with membership") {
  std::mt19937_64 rng(5);
  const std::size_t probe = 12;
  auto random_set = [&](Universe u) {
    std::vector<Vertex> items;
    for (Vertex v = 0; v < 8; ++v)
      if (rng() % 3 == 0) items.push_back(v);
    return rng() % 2 ? VertexSet::of(u, items) : VertexSet::cofinite_of(u, items);
  };
  for (Universe u : {Universe::finite(8), Universe::naturals()}) {
    for (int i = 0; i < 200; ++i) {
      VertexSet a = random_set(u), b = random_set(u);
      for (Vertex v = 0; v < (u.nat ? probe : 8); ++v) {
        CHECK(a.unite(b).contains(v) == (a.contains(v) || b.contains(v)));
        CHECK(a.intersect(b).contains(v) == (a.contains(v) && b.contains(v)));
        CHECK(a.minus(b).contains(v) == (a.contains(v) && !b.contains(v)));
        CHECK(a.complement().contains(v) == !a.contains(v));
      }
      CHECK(a.subset_of(b) == a.minus(b).is_empty());
    }
  }
}

TEST_CASE("set algebra closure matches the naive fixpoint") {
  std::mt19937_64 rng(13);
  RandomSpec spec;
  spec.max_vertices = 5;
  spec.max_edges = 4;
  spec.cofinite_chance = 0.3;
  for (int i = 0; i < 40; ++i) {
    auto g = random_structure(rng, spec);
    std::vector<VertexSet> gens;
    for (Vertex v : g->finite_vertices()) gens.push_back(g->single(v));
    for (const Edge& e : g->edges()) gens.push_back(e.range);
    auto expect = closure_fixpoint(gens, g->universe());
    auto got = *generate_G0(*g).closure;
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
  }
}

TEST_CASE("random structures respect their spec") {
  std::mt19937_64 rng(1);
  RandomSpec spec;
  spec.no_singular = true;
  spec.max_vertices = 5;
  spec.max_edges = 7;
  for (int i = 0; i < 50; ++i) {
    auto g = random_structure(rng, spec);
    CHECK(validate(*g).empty());
    CHECK(singular_vertices(*g).is_empty());
  }
  auto graphs = all_graphs(3, 3, false);
  for (const auto& g : graphs) CHECK(validate(*g).empty());
  // Isomorphism classes of graphs on one vertex with at most three loops.
  std::size_t one_vertex = 0;
  for (const auto& g : graphs) one_vertex += g->vertex_count() == 1;
  CHECK(one_vertex == 4);
}
