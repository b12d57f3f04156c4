#include <doctest.h>

#include <cmath>

#include "lpa/errors.hpp"
#include "lpa/matrix_oracle.hpp"
#include "lpa/random_structures.hpp"
#include "support.hpp"

using namespace lpa;

TEST_CASE("dimensions of small acyclic algebras") {
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(dim_acyclic(*line_graph(n)) == n * n);
    CHECK(dim_acyclic(*parallel_graph(n)) == (n + 1) * (n + 1));
  }
  CHECK(dim_acyclic(*test::parse_one("graph S { vertices a b c; }")) == 3);
}

TEST_CASE("matrix units come from the generators") {
  auto g = line_graph(3);
  auto rep = acyclic_matrix_rep(g, Ring::prime_field(2));
  CHECK(rep.dimension() == 3);
  CHECK(image_dimension(rep) == 9);
  for (EdgeId e = 0; e < g->edge_count(); ++e) {
    CHECK(mat_mul(rep.ring, rep.ghost(e), rep.edge(e)) == rep.vertex(g->target(e)));
  }
  Matrix sum = Matrix::zero(3);
  for (Vertex v : g->finite_vertices()) sum = mat_add(rep.ring, sum, rep.vertex(v));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(sum.at(i, j) == (i == j ? 1 : 0));
}

TEST_CASE("brute force simplicity") {
  CHECK(brute_force_simple(acyclic_matrix_rep(line_graph(2), Ring::prime_field(3))));
  CHECK(!brute_force_simple(acyclic_matrix_rep(test::parse_one("graph S { vertices a b; }"), Ring::prime_field(3))));
  CHECK(!brute_force_simple(acyclic_matrix_rep(test::parse_one("graph S { vertices a b c; edge f: a -> c; }"),
                                               Ring::prime_field(2))));
  CHECK_THROWS_AS(brute_force_simple(acyclic_matrix_rep(line_graph(2), Ring::rationals())), Error);
}

TEST_CASE("simplicity shortcuts agree with the full scan") {
  std::size_t scanned = 0;
  for (const auto& g : all_graphs(3, 3, true)) {
    for (unsigned long p : {2ul, 3ul}) {
      MatrixRep rep = acyclic_matrix_rep(g, Ring::prime_field(p));
      double elements = std::pow(static_cast<double>(p), static_cast<double>(image_dimension(rep)));
      if (elements > 16384) continue;
      CHECK_MESSAGE(brute_force_simple(rep, 16384, true) == brute_force_simple(rep), g->name());
      ++scanned;
    }
  }
  CHECK(scanned > 10);
}

TEST_CASE("matrix rep needs an acyclic graph") {
  try {
    acyclic_matrix_rep(rose_graph(1), Ring::prime_field(2));
    FAIL("expected NotAcyclic");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAcyclic);
  }
}

TEST_CASE("laurent evaluation of the single loop") {
  auto g = rose_graph(1);
  GraphAlgebra alg(g, Ring::rationals());
  auto rep = laurent_rep(alg);
  auto x = alg.add(alg.mul(alg.edge(0), alg.edge(0)), alg.scale(alg.ghost(0), Coef(3)));
  Laurent p = rep.eval(x);
  CHECK(p.size() == 2);
  CHECK(p.at(2) == 1);
  CHECK(p.at(-1) == 3);
  CHECK(alg.equal(rep.lift(p), x));
  CHECK(rep.eval(alg.mul(alg.edge(0), alg.ghost(0))) == Laurent{{0, Coef(1)}});
}
