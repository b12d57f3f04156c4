#include <doctest.h>

#include <random>

#include "lpa/graph_algebra.hpp"
#include "lpa/matrix_oracle.hpp"
#include "lpa/random_structures.hpp"
#include "lpa/ultra_algebra.hpp"
#include "support.hpp"

using namespace lpa;

TEST_CASE("graph relations hold in normal form") {
  for (auto g : {rose_graph(2), line_graph(3), parallel_graph(2)}) {
    CAPTURE(g->name());
    GraphAlgebra alg(g, Ring::rationals());
    for (EdgeId e = 0; e < g->edge_count(); ++e) {
      for (EdgeId f = 0; f < g->edge_count(); ++f) {
        auto lhs = alg.mul(alg.ghost(e), alg.edge(f));
        auto rhs = e == f ? alg.vertex(g->target(e)) : alg.zero();
        CHECK(alg.equal(lhs, rhs));
      }
      CHECK(alg.equal(alg.mul(alg.vertex(g->edge(e).source), alg.edge(e)), alg.edge(e)));
      CHECK(alg.equal(alg.mul(alg.edge(e), alg.vertex(g->target(e))), alg.edge(e)));
    }
    for (Vertex v : g->finite_vertices()) {
      if (g->out_edges(v).empty()) continue;
      auto sum = alg.zero();
      for (EdgeId e : g->out_edges(v)) sum = alg.add(sum, alg.mul(alg.edge(e), alg.ghost(e)));
      CHECK(alg.equal(sum, alg.vertex(v)));
    }
  }
}

TEST_CASE("graph star is an anti-multiplicative involution") {
  std::mt19937_64 rng(7);
  auto g = rose_graph(2);
  GraphAlgebra alg(g, Ring::rationals());
  auto monos = all_monomials(*g, 2);
  for (int i = 0; i < 60; ++i) {
    auto x = random_element(alg, monos, rng);
    auto y = random_element(alg, monos, rng);
    CHECK(alg.equal(alg.star(alg.star(x)), x));
    CHECK(alg.equal(alg.star(alg.mul(x, y)), alg.mul(alg.star(y), alg.star(x))));
  }
}

TEST_CASE("normal form is idempotent and linear") {
  std::mt19937_64 rng(11);
  auto g = parallel_graph(3);
  GraphAlgebra alg(g, Ring::prime_field(3));
  auto monos = all_monomials(*g, 1);
  for (int i = 0; i < 60; ++i) {
    auto x = random_element(alg, monos, rng);
    auto y = random_element(alg, monos, rng);
    auto nx = alg.normalize(x);
    CHECK(alg.normalize(nx) == nx);
    CHECK(alg.normalize(alg.add(x, y)) == alg.normalize(alg.add(nx, alg.normalize(y))));
  }
}

TEST_CASE("ultragraph relations") {
  auto g = test::parse_one(
      "ultragraph U { vertices a b c; edge e: a -> { b c }; edge f: a -> c; edge g: b -> { a c }; }");
  UltraAlgebra alg(g, Ring::rationals());
  auto sets = sample_sets(*g);
  for (const auto& x : sets)
    for (const auto& y : sets) {
      CHECK(alg.equal(alg.mul(alg.proj(x), alg.proj(y)), alg.proj(x.intersect(y))));
      auto lhs = alg.sub(alg.add(alg.proj(x), alg.proj(y)), alg.proj(x.intersect(y)));
      CHECK(alg.equal(lhs, alg.proj(x.unite(y))));
    }
  for (EdgeId e = 0; e < g->edge_count(); ++e) {
    CHECK(alg.equal(alg.mul(alg.ghost(e), alg.edge(e)), alg.proj(g->edge(e).range)));
    for (EdgeId f = 0; f < g->edge_count(); ++f)
      if (e != f) CHECK(alg.is_zero(alg.mul(alg.ghost(e), alg.edge(f))));
  }
  for (Vertex v : {Vertex{0}, Vertex{1}}) {
    auto sum = alg.zero();
    for (EdgeId e : g->out_edges(v)) sum = alg.add(sum, alg.mul(alg.edge(e), alg.ghost(e)));
    CHECK(alg.equal(sum, alg.vertex(v)));
  }
  CHECK(!alg.is_zero(alg.vertex(2)));
}

TEST_CASE("ultragraph products are associative on random elements") {
  std::mt19937_64 rng(3);
  auto g = test::parse_one("ultragraph U { universe nat; vertices a b; edge e: a -> cofinite { a }; edge f: b -> { a b }; }");
  UltraAlgebra alg(g, Ring::integers_mod(4));
  for (int i = 0; i < 80; ++i) {
    auto x = test::random_ultra(alg, rng);
    auto y = test::random_ultra(alg, rng);
    auto z = test::random_ultra(alg, rng);
    CHECK(alg.equal(alg.mul(alg.mul(x, y), z), alg.mul(x, alg.mul(y, z))));
  }
}

TEST_CASE("reduced forms agree with the exact zero test") {
  std::mt19937_64 rng(5);
  auto g = test::parse_one("ultragraph U { vertices a b c; edge e: a -> { b c }; edge f: b -> c; edge g: c -> { a b }; }");
  UltraAlgebra alg(g, Ring::rationals());
  for (int i = 0; i < 60; ++i) {
    auto x = test::random_ultra(alg, rng);
    if (alg.reduce(x).is_zero()) CHECK(alg.is_zero(x));
    CHECK(alg.is_zero(alg.sub(x, alg.reduce(x))));
  }
}
