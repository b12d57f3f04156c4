#include <doctest.h>

#include <random>
#include <set>

#include "lpa/analysis.hpp"
#include "lpa/random_structures.hpp"
#include "support.hpp"

using namespace lpa;

namespace {

// Hereditary saturated unions by direct subset scan over vertex bitmasks.
std::set<unsigned> hs_oracle(const Structure& g) {
  std::size_t n = g.vertex_count();
  auto range_mask = [&](const Edge& e) {
    unsigned m = 0;
    for (Vertex v = 0; v < n; ++v)
      if (e.range.contains(v)) m |= 1u << v;
    return m;
  };
  std::set<unsigned> out;
  for (unsigned m = 0; m < (1u << n); ++m) {
    bool ok = true;
    for (const Edge& e : g.edges())
      if ((m >> e.source & 1) && (range_mask(e) & ~m)) ok = false;
    for (Vertex v = 0; v < n && ok; ++v) {
      if (m >> v & 1 || g.out_edges(v).empty() || g.is_infinite_flagged(v)) continue;
      bool all_in = true;
      for (EdgeId e : g.out_edges(v))
        if (range_mask(g.edge(e)) & ~m) all_in = false;
      if (all_in) ok = false;
    }
    if (ok) out.insert(m);
  }
  return out;
}

}  // namespace

TEST_CASE("condition (L) on small examples") {
  auto rose1 = rose_graph(1);
  auto v = condition_L(*rose1);
  CHECK(v.result == Truth::False);
  REQUIRE(!v.witnesses.empty());
  CHECK(v.witnesses[0].find("cycle without exit") != std::string::npos);
  CHECK(condition_L(*rose_graph(2)).result == Truth::True);
  CHECK(condition_L(*line_graph(3)).result == Truth::True);
  auto two = test::parse_one("graph C { vertices a b; edge f: a -> b; edge g: b -> a; }");
  CHECK(condition_L(*two).result == Truth::False);
  auto exit = test::parse_one("graph C { vertices a b c; edge f: a -> b; edge g: b -> a; edge h: b -> c; }");
  CHECK(condition_L(*exit).result == Truth::True);
}

TEST_CASE("wide ranges count as exits only under the standard rule") {
  auto g = test::parse_one("ultragraph U { vertices v w; edge e: v -> { v w }; edge f: w -> v; }");
  CHECK(condition_L(*g, ExitRule::Standard).result == Truth::True);
  CHECK(condition_L(*g, ExitRule::Literal).result == Truth::False);
}

TEST_CASE("frontier vertices make the verdict undecided") {
  auto g = test::parse_one("graph C { vertices a; frontier a; edge f: a -> a; }");
  CHECK(condition_L(*g).result == Truth::Unknown);
}

TEST_CASE("hereditary saturated sets match a direct scan") {
  std::mt19937_64 rng(17);
  RandomSpec spec;
  spec.max_vertices = 5;
  spec.max_edges = 6;
  spec.infinite_chance = 0.15;
  for (int i = 0; i < 60; ++i) {
    spec.kind = i % 2 ? Kind::Graph : Kind::Ultragraph;
    auto g = random_structure(rng, spec);
    auto expect = hs_oracle(*g);
    std::set<unsigned> got;
    for (const auto& m : hereditary_saturated_subsets(*g)) {
      unsigned mask = 0;
      for (Vertex v : m.members()) mask |= 1u << v;
      got.insert(mask);
      CHECK(is_hereditary(*g, m));
      CHECK(is_saturated(*g, m));
    }
    CHECK(got == expect);
  }
}

TEST_CASE("hereditary saturated sets need a finite universe") {
  auto g = test::parse_one("ultragraph G { universe nat; vertices v0; edge e: v0 -> cofinite { v0 }; }");
  CHECK_THROWS_AS(hereditary_saturated_subsets(*g), Error);
}

TEST_CASE("simplicity verdicts") {
  CHECK(simplicity_verdict(*line_graph(3), Ring::rationals()).result == Truth::True);
  CHECK(simplicity_verdict(*rose_graph(2), Ring::rationals()).result == Truth::True);
  CHECK(simplicity_verdict(*rose_graph(1), Ring::rationals()).result == Truth::False);
  auto split = test::parse_one("graph S { vertices a b; }");
  auto v = simplicity_verdict(*split, Ring::rationals());
  CHECK(v.result == Truth::False);
  CHECK(v.witnesses.at(0).find("hereditary saturated") != std::string::npos);
  CHECK(simplicity_verdict(*line_graph(2), Ring::integers()).result == Truth::Unknown);
}

TEST_CASE("unitality") {
  CHECK(is_unital(*line_graph(3)));
  CHECK(is_unital(*test::parse_one("ultragraph G { universe nat; vertices v0; edge e: v0 -> cofinite { v0 }; }")));
  CHECK(!is_unital(*test::parse_one("ultragraph G { universe nat; vertices v0 v1; edge e: v0 -> v1; }")));
  CHECK(!is_unital(*test::parse_one("graph G { universe nat; vertices v0 v1; edge e: v0 -> v1; }")));
}

TEST_CASE("pin down reaches a vertex multiple or a cycle polynomial") {
  std::mt19937_64 rng(23);
  auto g = test::parse_one("ultragraph U { vertices a b c; edge e: a -> { b c }; edge f: b -> c; edge g: c -> { a b }; }");
  UltraAlgebra alg(g, Ring::rationals());
  int done = 0;
  for (int i = 0; i < 40; ++i) {
    auto x = test::random_ultra(alg, rng);
    if (alg.is_zero(x)) continue;
    PinDown p = pin_down(alg, x);
    CHECK(alg.equal(alg.mul(alg.mul(p.a, x), p.b), p.form));
    CHECK(!alg.is_zero(p.form));
    if (p.kind == PinDown::Kind::ScalarVertex) CHECK(alg.equal(p.form, alg.scale(alg.vertex(p.v), p.scalar)));
    ++done;
  }
  CHECK(done > 20);
  CHECK_THROWS_AS(pin_down(alg, alg.zero()), Error);
}
