#include <doctest.h>

#include <fstream>
#include <sstream>

#include "lpa/dsl.hpp"
#include "lpa/errors.hpp"
#include "support.hpp"

using namespace lpa;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string parse_error(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return std::to_string(e.line()) + ":" + std::to_string(e.col()) + " " + e.expected();
  }
  return "no error";
}

}  // namespace

TEST_CASE("single infinite edge parses into a nat ultragraph") {
  auto g = test::parse_one("ultragraph G { universe nat; vertices v0; edge e: v0 -> cofinite { v0 }; }");
  CHECK(g->is_nat());
  CHECK(g->kind() == Kind::Ultragraph);
  CHECK(g->vertex("v0") == 0);
  const Edge& e = g->edge(g->edge_id("e"));
  CHECK(e.source == 0);
  CHECK(e.range.is_cofinite());
  CHECK(!e.range.contains(0));
  CHECK(e.range.contains(1));
  CHECK(e.range.contains(1000));
}

TEST_CASE("two-vertex line") {
  auto g = test::parse_one("graph E { vertices u w; edge f: u -> w; }");
  CHECK(!g->is_nat());
  CHECK(g->vertex_count() == 2);
  CHECK(g->target(g->edge_id("f")) == g->vertex("w"));
}

TEST_CASE("empty range is rejected with a position") {
  auto msg = parse_error("ultragraph G {\n  vertices u;\n  edge e: u -> { };\n}");
  CHECK(msg.find("empty range") != std::string::npos);
  CHECK(msg.rfind("3:18", 0) == 0);
}

TEST_CASE("parse errors point at the offending token") {
  CHECK(parse_error("graph G { vertices u w; edge f: u -> { w }; }").rfind("1:38 vertex name", 0) == 0);
  CHECK(parse_error("graph G { vertices u; edge f u -> u; }").rfind("1:30 ':'", 0) == 0);
  CHECK(parse_error("graph G { universe big; }").rfind("1:20 ", 0) == 0);
  CHECK(parse_error("graph G { vertices u; sigma { u -> 12; } }").find("bit word") != std::string::npos);
  CHECK(parse_error("graph G { } graph G { }").find("unique structure name") != std::string::npos);
  CHECK(parse_error("graph G { vertices u; $ }").rfind("1:23 token", 0) == 0);
  CHECK(parse_error("graph G { vertices u;").find("'}'") != std::string::npos);
}

TEST_CASE("comments and whitespace are ignored") {
  auto a = parse_document("graph G{vertices u w;edge f:u->w;}");
  auto b = parse_document("# head\ngraph G {\n  vertices u w;  # two\n  edge f : u -> w ;\n}\n");
  CHECK(a == b);
}

TEST_CASE("nat vertices are indexed by first appearance unless pinned") {
  auto g = test::parse_one(
      "ultragraph G { universe nat; vertices a b@0 c; edge e: a -> { d _7 }; edge f: d -> cofinite { }; }");
  CHECK(g->vertex("b") == 0);
  CHECK(g->vertex("a") == 1);
  CHECK(g->vertex("c") == 2);
  CHECK(g->vertex("d") == 3);
  CHECK(g->edge(g->edge_id("e")).range.contains(7));
  CHECK(g->vertex_name(7) == "_7");
}

TEST_CASE("reference errors surface when building") {
  auto doc = parse_document("graph G { vertices u; edge f: u -> w; }");
  auto v = validate(doc.structures[0]);
  REQUIRE(v.size() == 1);
  CHECK(v[0].message == "unknown vertex w");
  CHECK_THROWS_AS(build(doc.structures[0]), Error);
  auto dup = parse_document("graph G { vertices u u; }");
  CHECK(validate(dup.structures[0]).at(0).message == "duplicate vertex");
  auto idx = parse_document("graph G { vertices u@3; }");
  CHECK(validate(idx.structures[0]).at(0).message == "index needs a nat universe");
  auto all = parse_document("ultragraph G { vertices u; edge e: u -> cofinite { u }; }");
  CHECK(validate(all.structures[0]).at(0).message == "empty range");
}

TEST_CASE("sigma tables and flags reach the structure") {
  auto g = test::parse_one(
      "ultragraph G { universe nat; vertices v0 v1; infinite v0; frontier v1; "
      "edge e: v0 -> cofinite { v0 }; sigma { v1 -> 1; } }");
  CHECK(g->is_infinite_flagged(0));
  CHECK(g->is_frontier(1));
  CHECK(g->sigma_table().at(1) == "1");
}

TEST_CASE("printing is canonical and parses back") {
  for (const char* f : {"line3.ug", "rose2.ug", "ugr1.ug", "toy.ug", "grugrex.ug"}) {
    CAPTURE(f);
    auto doc = parse_document(slurp(test::fixture_path(f)));
    auto text = print_document(doc);
    CHECK(parse_document(text) == doc);
    CHECK(print_document(parse_document(text)) == text);
  }
}

TEST_CASE("declarations of built structures rebuild the same structure") {
  for (const char* f : {"line3.ug", "rose2.ug", "ugr1.ug", "toy.ug", "grugrex.ug"}) {
    CAPTURE(f);
    auto g = build(parse_document(slurp(test::fixture_path(f))).structures.at(0));
    auto again = build(parse_document(print_structure(to_decl(*g))).structures.at(0));
    CHECK(*again == *g);
  }
}

TEST_CASE("dot output") {
  auto g = test::parse_one("ultragraph G { universe nat; vertices v0 v1; edge e: v0 -> cofinite { v0 }; }");
  std::string dot = to_dot(*g);
  CHECK(dot.rfind("digraph \"G\" {\n", 0) == 0);
  CHECK(dot.find("\"v0\" -> \"v1\" [label=\"e\"];") != std::string::npos);
  CHECK(dot.find("\"⋯ e\" [label=\"⋯\", shape=plaintext];") != std::string::npos);
  CHECK(dot.find("\"v0\" -> \"⋯ e\" [label=\"e\"];") != std::string::npos);
  auto h = test::parse_one("graph H { vertices a b; edge f: a -> b; edge g: a -> b; }");
  std::string d2 = to_dot(*h);
  CHECK(d2 == "digraph \"H\" {\n  \"a\";\n  \"b\";\n  \"a\" -> \"b\" [label=\"f\"];\n  \"a\" -> \"b\" [label=\"g\"];\n}\n");
}
