#include <doctest.h>

#include "lpa/errors.hpp"
#include "lpa/expr.hpp"
#include "support.hpp"

using namespace lpa;

TEST_CASE("expression examples") {
  auto ugr1 = test::parse_one("ultragraph G { universe nat; vertices v0; edge e: v0 -> cofinite { v0 }; }");
  CHECK(eval_expr(ugr1, Ring::integers(), "star(s(e)) * s(e)") == "p(cofinite{v0})");
  auto line = test::parse_one("graph E { vertices v w; edge f: v -> w; }");
  CHECK(eval_expr(line, Ring::integers(), "q(v) * q(w)") == "0");
  auto rose = test::parse_one("graph R { vertices v; edge e1: v -> v; }");
  CHECK(eval_expr(rose, Ring::integers(), "s(e1) * s(e1)") == "s(e1 e1)");
}

TEST_CASE("scalars, sums and the Cuntz-Krieger relation") {
  auto rose = test::parse_one("graph R { vertices v; edge e1: v -> v; edge e2: v -> v; }");
  CHECK(eval_expr(rose, Ring::rationals(), "s(e1) * star(s(e1)) + s(e2) * star(s(e2))") == "q(v)");
  CHECK(eval_expr(rose, Ring::rationals(), "2 * s(e1) * 3") == "6 * s(e1)");
  CHECK(eval_expr(rose, Ring::integers_mod(4), "2 * s(e1) + 2 * s(e1)") == "0");
  CHECK(eval_expr(rose, Ring::rationals(), "s(e1) - s(e1 e1) * star(s(e1)) - s(e1 e2) * star(s(e2))") == "0");
  CHECK(eval_expr(rose, Ring::rationals(), "3") == "3 * q(v)");
}

TEST_CASE("ultragraph projections") {
  auto toy = test::parse_one("ultragraph T { vertices u v w; edge e: u -> { v w }; edge f: v -> w; }");
  CHECK(eval_expr(toy, Ring::rationals(), "star(s(e)) * s(e)") == "p({v w})");
  CHECK(eval_expr(toy, Ring::rationals(), "p({v w}) * p(w)") == "p(w)");
  CHECK(eval_expr(toy, Ring::rationals(), "p(cofinite{u}) - p({v w})") == "0");
  CHECK(eval_expr(toy, Ring::rationals(), "q(u) * s(e)") == "s(e)");
  CHECK(eval_expr(toy, Ring::rationals(), "s(f) * s(e)") == "0");
}

TEST_CASE("expression errors") {
  auto toy = test::parse_one("ultragraph T { vertices u v; edge e: u -> v; }");
  CHECK_THROWS_AS(eval_expr(toy, Ring::rationals(), "s(x)"), Error);
  CHECK_THROWS_AS(eval_expr(toy, Ring::rationals(), "s(e) *"), ParseError);
  CHECK_THROWS_AS(eval_expr(toy, Ring::rationals(), "s(e))"), ParseError);
  try {
    eval_expr(toy, Ring::rationals(), "q(z)");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingGeneratorAssignment);
  }
}
