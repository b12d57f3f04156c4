#include <doctest.h>

#include <fstream>
#include <sstream>

#include "lpa/eg.hpp"
#include "lpa/families.hpp"
#include "lpa/suites.hpp"
#include "support.hpp"

using namespace lpa;

namespace {

std::shared_ptr<Structure> load(const std::string& f) {
  std::ifstream in(test::fixture_path(f));
  std::stringstream s;
  s << in.rdbuf();
  return test::parse_one(s.str());
}

}  // namespace

TEST_CASE("grugrex sigma and X tables") {
  auto g = load("grugrex.ug");
  EGOptions opts;
  opts.window = 4;
  EGData eg = build_EG(g, opts);
  const char* expected[] = {"1", "10", "100", "1000"};
  for (int i = 1; i <= 4; ++i) {
    Vertex v = g->vertex("v" + std::to_string(i));
    REQUIRE(eg.sigma.count(v));
    CHECK(eg.sigma.at(v).bits == expected[i - 1]);
  }
  REQUIRE(eg.x_table.size() == g->edge_count());
  CHECK(eg.x_table[0] == std::vector<EGNode>{EGNode::word(Word{"1"})});
  for (std::size_t n = 0; n < eg.x_table.size(); ++n) {
    CHECK(!eg.x_table[n].empty());
    CHECK(eg.x_complete[n]);
  }
  CHECK(eg.warnings.empty());
}

TEST_CASE("finite ultragraphs have no words") {
  auto g = load("toy.ug");
  EGData eg = build_EG(g);
  CHECK(eg.delta.empty());
  CHECK(eg.graph->vertex_count() == g->vertex_count());
}

TEST_CASE("generator families satisfy their axioms on fixtures") {
  for (const char* f : {"toy.ug", "line3.ug", "rose2.ug"}) {
    CAPTURE(f);
    auto g = load(f);
    UltraAlgebra ultra(g, Ring::rationals());
    CHECK(check_family(*g, ultra_generators(ultra), ultra, Axioms::uLP).ok());
    if (g->kind() == Kind::Graph) {
      GraphAlgebra alg(g, Ring::rationals());
      CHECK(check_family(*g, graph_generators(alg), alg, Axioms::LP).ok());
    }
  }
}

TEST_CASE("a broken family is caught") {
  auto g = load("line3.ug");
  GraphAlgebra alg(g, Ring::rationals());
  auto m = graph_generators(alg);
  m.edge_images[0] = alg.scale(*m.edge_images[0], Coef(2));
  CHECK(!check_family(*g, m, alg, Axioms::LP).ok());
}

TEST_CASE("identity suites pass on the fixtures") {
  SuiteOptions opts;
  opts.eg.window = 4;
  auto grugrex = load("grugrex.ug");
  for (const char* s : {"corth", "lglg", "lglg2", "lci", "texlg", "transfer_L", "desing_L"}) {
    CAPTURE(s);
    Report r = run_suite(s, grugrex, opts);
    CHECK(r.ok());
    CHECK(r.count(Status::Pass) > 0);
  }
  auto toy = load("toy.ug");
  for (const char* s : {"lci", "texlg", "transfer_L", "transfer_hs", "desing_L"}) {
    CAPTURE(s);
    CHECK(run_suite(s, toy, opts).ok());
  }
  CHECK_THROWS_AS(run_suite("nope", toy, opts), Error);
}
