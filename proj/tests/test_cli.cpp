#include <doctest.h>

#include "cli.hpp"
#include "lpa/errors.hpp"
#include "support.hpp"

using namespace lpa;

TEST_CASE("analyze reports unitality and simplicity") {
  auto doc = cli::read_document(test::fixture_path("line3.ug"));
  std::string out = cli::analyze(doc, {});
  CHECK(out.find("unital: yes; simple: yes") != std::string::npos);
  CHECK(out.find("singular vertices: v3") != std::string::npos);
}

TEST_CASE("construct eg writes the sigma table") {
  auto doc = cli::read_document(test::fixture_path("grugrex.ug"));
  cli::Options opts;
  opts.window = 4;
  std::string out = cli::construct("eg", doc, opts);
  CHECK(out.find("sigma { v1 -> 1; v2 -> 10; v3 -> 100; v4 -> 1000; }") != std::string::npos);
  auto again = parse_document(out);
  CHECK(again.structures.size() == 1);
  CHECK_NOTHROW(build(again.structures[0]));
}

TEST_CASE("verify lci on toy passes") {
  auto doc = cli::read_document(test::fixture_path("toy.ug"));
  CHECK(cli::verify("lci", doc, {}).ok());
}

TEST_CASE("exit codes") {
  CHECK(cli::exit_code(ParseError(1, 1, "x")) == cli::ParseFailure);
  CHECK(cli::exit_code(Error(ErrorKind::TruncationExceeded, "x")) == cli::Truncation);
  CHECK(cli::exit_code(Error(ErrorKind::NotAcyclic, "x")) == cli::Engine);
  CHECK_THROWS_AS(cli::read_document(test::fixture_path("missing.ug")), ParseError);
}

TEST_CASE("structure selection") {
  auto doc = parse_document("graph A { vertices a; } graph B { vertices b; }");
  cli::Options opts;
  opts.structure = "B";
  CHECK(cli::export_dot(doc, opts) == "digraph \"B\" {\n  \"b\";\n}\n");
  opts.structure = "C";
  CHECK_THROWS_AS(cli::export_dot(doc, opts), Error);
}

TEST_CASE("desing refuses infinitely many sinks") {
  auto doc = cli::read_document(test::fixture_path("ugr1.ug"));
  try {
    cli::construct("desing", doc, {});
    FAIL("expected a truncation error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TruncationExceeded);
    CHECK(cli::exit_code(e) == cli::Truncation);
  }
  auto finite = cli::read_document(test::fixture_path("line3.ug"));
  CHECK(cli::construct("desing", finite, {}).find("line3_desing") != std::string::npos);
}
