// One line per acceptance criterion: [PASS]/[FAIL] N name (t s).
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "lpa/analysis.hpp"
#include "lpa/constructions.hpp"
#include "lpa/dsl.hpp"
#include "lpa/eg.hpp"
#include "lpa/errors.hpp"
#include "lpa/families.hpp"
#include "lpa/matrix_oracle.hpp"
#include "lpa/random_structures.hpp"
#include "lpa/suites.hpp"
#include "support.hpp"

using namespace lpa;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::shared_ptr<Structure> fixture(const std::string& name) {
  return build(parse_document(slurp(test::fixture_path(name))).structures.at(0));
}

std::string first_failure(const Report& r) {
  for (const auto& i : r.instances)
    if (i.status == Status::Fail || i.status == Status::Unknown)
      return r.suite + " on " + r.subject + ": " + i.group + " " + i.id + ": " + i.witness;
  return {};
}

// Paths ending at each sink, counted by length with a backward relaxation.
std::size_t oracle_dimension(const Structure& g) {
  std::size_t n = g.vertex_count(), total = 0;
  for (Vertex sink = 0; sink < n; ++sink) {
    if (!g.out_edges(sink).empty()) continue;
    std::vector<std::size_t> ways(n, 0);  // paths of the current length into sink
    ways[sink] = 1;
    std::size_t count = 1;
    for (std::size_t len = 1; len < n; ++len) {
      std::vector<std::size_t> next(n, 0);
      for (EdgeId id = 0; id < g.edge_count(); ++id) next[g.edge(id).source] += ways[g.target(id)];
      ways = next;
      for (std::size_t w : ways) count += w;
    }
    total += count * count;
  }
  return total;
}

// A cycle whose vertices each emit exactly one edge, which stays on the cycle.
bool oracle_cycle_without_exit(const Structure& g) {
  for (Vertex start : g.finite_vertices()) {
    Vertex v = start;
    for (std::size_t step = 0; step < g.vertex_count(); ++step) {
      if (g.out_edges(v).size() != 1) break;
      v = g.target(g.out_edges(v).front());
      if (v == start) return true;
    }
  }
  return false;
}

// 1. Symbolic engine against the path representation.
Outcome matrix_anchor() {
  Outcome o;
  auto graphs = all_graphs(4, 4, true);
  std::size_t products = 0;
  for (const Ring& ring : {Ring::prime_field(2), Ring::prime_field(3)}) {
    for (const auto& g : graphs) {
      GraphAlgebra alg(g, ring);
      MatrixRep rep = acyclic_matrix_rep(g, ring);
      Report r = compare(alg, rep, 500, 1);
      products += r.count(Status::Pass) + r.count(Status::Fail);
      o.expect(r.ok(), first_failure(r));
      std::size_t d = oracle_dimension(*g);
      o.expect(dim_acyclic(*g) == d, g->name() + ": dim_acyclic " + std::to_string(dim_acyclic(*g)) + " vs " + std::to_string(d));
      o.expect(normal_basis(alg).size() == d, g->name() + ": normal basis " + std::to_string(normal_basis(alg).size()));
      o.expect(image_dimension(rep) == d, g->name() + ": image dimension " + std::to_string(image_dimension(rep)));
    }
  }
  if (o.ok) o.detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(products) + " checks";
  return o;
}

// 2. Line graphs and parallel edges give one full matrix block.
Outcome full_blocks() {
  Outcome o;
  std::vector<std::shared_ptr<Structure>> cases = {line_graph(2), line_graph(3), line_graph(4), parallel_graph(3)};
  std::vector<std::size_t> sizes = {2, 3, 4, 4};
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& g = cases[i];
    MatrixRep rep = acyclic_matrix_rep(g, Ring::prime_field(2));
    o.expect(rep.sinks.size() == 1 && rep.block_size.at(0) == sizes[i], g->name() + ": block size");
    o.expect(image_dimension(rep) == sizes[i] * sizes[i], g->name() + ": not a full block");
    o.expect(simplicity_verdict(*g, Ring::prime_field(2)).result == Truth::True, g->name() + ": verdict");
    o.expect(brute_force_simple(rep, std::uint64_t{1} << 20, true), g->name() + ": brute force says not simple");
  }
  return o;
}

// 3. Single loop against Laurent polynomials.
Outcome laurent_anchor() {
  Outcome o;
  auto g = rose_graph(1);
  GraphAlgebra alg(g, Ring::rationals());
  LaurentRep rep = laurent_rep(alg);
  std::set<GraphMono> seen;
  for (long d = -5; d <= 5; ++d) {
    Path loop{0, std::vector<EdgeId>(static_cast<std::size_t>(d < 0 ? -d : d), 0)};
    auto mono = d >= 0 ? alg.path(loop) : alg.star(alg.path(loop));
    auto comps = alg.degree_components(mono);
    o.expect(comps.size() == 1 && comps.begin()->first == d, "degree of x^" + std::to_string(d));
    auto nf = alg.normalize(mono);
    o.expect(nf.terms.size() == 1, "x^" + std::to_string(d) + " is not one monomial");
    if (!nf.terms.empty()) seen.insert(nf.terms.begin()->first);
    o.expect(rep.eval(nf) == Laurent{{d, Coef(1)}}, "eval of degree " + std::to_string(d));
    o.expect(alg.equal(rep.lift(Laurent{{d, Coef(1)}}), nf), "lift of degree " + std::to_string(d));
  }
  o.expect(seen.size() == 11, "degree monomials are not distinct");
  std::mt19937_64 rng(3);
  auto monos = all_monomials(*g, 4);
  for (int i = 0; i < 200; ++i) {
    auto x = random_element(alg, monos, rng), y = random_element(alg, monos, rng);
    o.expect(rep.eval(alg.mul(x, y)) == laurent_mul(alg.ring(), rep.eval(x), rep.eval(y)),
             "product " + alg.format(x) + " * " + alg.format(y));
  }
  return o;
}

// 4. (xy)z = x(yz) over Z/4.
Outcome associativity() {
  Outcome o;
  std::mt19937_64 rng(4);
  Ring ring = Ring::integers_mod(4);
  RandomSpec spec;
  spec.max_vertices = 5;
  spec.max_edges = 6;
  std::size_t structures = 0;
  for (int i = 0; i < 8; ++i) {
    spec.kind = Kind::Graph;
    auto g = random_structure(rng, spec, "G" + std::to_string(i));
    GraphAlgebra alg(g, ring);
    auto monos = all_monomials(*g, 2);
    for (int t = 0; t < 1000; ++t) {
      auto x = random_element(alg, monos, rng), y = random_element(alg, monos, rng), z = random_element(alg, monos, rng);
      o.expect(alg.equal(alg.mul(alg.mul(x, y), z), alg.mul(x, alg.mul(y, z))), g->name() + ": " + alg.format(x));
    }
    ++structures;
  }
  for (int i = 0; i < 8; ++i) {
    spec.kind = Kind::Ultragraph;
    spec.nat = i % 2;
    spec.cofinite_chance = 0.3;
    auto g = random_structure(rng, spec, "U" + std::to_string(i));
    UltraAlgebra alg(g, ring);
    for (int t = 0; t < 1000; ++t) {
      auto x = test::random_ultra(alg, rng), y = test::random_ultra(alg, rng), z = test::random_ultra(alg, rng);
      o.expect(alg.equal(alg.mul(alg.mul(x, y), z), alg.mul(x, alg.mul(y, z))), g->name() + ": " + alg.format(x));
    }
    ++structures;
  }
  if (o.ok) o.detail = std::to_string(structures) + " structures";
  return o;
}

// 5. Sigma and X tables on grugrex.
Outcome eg_grugrex() {
  Outcome o;
  auto g = fixture("grugrex.ug");
  EGOptions opts;
  opts.window = 4;
  EGData eg = build_EG(g, opts);
  for (std::size_t i = 1; i <= 4; ++i) {
    std::string expect = "1" + std::string(i - 1, '0');
    Vertex v = g->vertex("v" + std::to_string(i));
    o.expect(eg.sigma.count(v) && eg.sigma.at(v).bits == expect, "sigma(v" + std::to_string(i) + ")");
  }
  o.expect(eg.x_table.at(0) == std::vector<EGNode>{EGNode::word(Word{"1"})}, "X(e1) != {(1)}");
  for (std::size_t n = 0; n < g->edge_count(); ++n)
    o.expect(!eg.x_table[n].empty() && eg.x_complete[n], "X(e" + std::to_string(n + 1) + ") empty or cut");
  return o;
}

// 6. Family checks.
Outcome family_suites() {
  Outcome o;
  std::mt19937_64 rng(6);
  std::size_t skips = 0, checks = 0;
  auto take = [&](const Report& r, bool skips_allowed) {
    o.expect(r.count(Status::Fail) == 0 && r.count(Status::Unknown) == 0, first_failure(r));
    if (!skips_allowed) o.expect(r.count(Status::Skip) == 0, r.suite + " on " + r.subject + ": skip away from a frontier");
    skips += r.count(Status::Skip);
    checks += r.instances.size();
  };
  Ring q = Ring::rationals();
  RandomSpec spec;
  spec.max_vertices = 4;
  spec.max_edges = 5;
  for (int i = 0; i < 50; ++i) {
    spec.kind = i % 2 ? Kind::Graph : Kind::Ultragraph;
    spec.infinite_chance = 0.1;
    auto g = random_structure(rng, spec, "F" + std::to_string(i));
    UltraAlgebra ultra(g, q);
    take(check_family(*g, ultra_generators(ultra), ultra, Axioms::uLP), false);
    if (g->kind() == Kind::Graph) {
      GraphAlgebra alg(g, q);
      take(check_family(*g, graph_generators(alg), alg, Axioms::LP), false);
    }
  }
  RandomSpec ns;
  ns.no_singular = true;
  ns.max_vertices = 4;
  ns.max_edges = 5;
  for (int i = 0; i < 20; ++i) {
    auto g = random_structure(rng, ns, "N" + std::to_string(i));
    std::vector<EdgeId> f;
    for (EdgeId e = 0; e < g->edge_count(); ++e) f.push_back(e);
    std::shuffle(f.begin(), f.end(), rng);
    f.resize(std::min<std::size_t>(f.size(), 1 + rng() % 3));
    GFData gf = build_GF(*g, f);
    ELAlgebra el(g, q);
    take(check_family(*gf.graph, gf_family(gf, el), el, Axioms::LP), false);
  }
  std::vector<std::shared_ptr<Structure>> lex = {fixture("grugrex.ug")};
  for (int i = 0; i < 20; ++i) lex.push_back(random_structure(rng, ns, "L" + std::to_string(i)));
  for (const auto& g : lex) {
    EGOptions opts;
    opts.window = 4;
    EGData eg = build_EG(g, opts);
    GraphAlgebra alg(eg.graph, q);
    take(check_family(*g, eg_family(eg, alg), alg, Axioms::ExL), true);
  }
  RandomSpec ds;
  ds.max_vertices = 4;
  ds.max_edges = 4;
  ds.want_sink = true;
  ds.infinite_chance = 0.3;
  for (int i = 0; i < 20; ++i) {
    ds.nat = i % 4 == 3;
    ds.cofinite_chance = ds.nat ? 0.3 : 0.0;
    auto g = random_structure(rng, ds, "D" + std::to_string(i));
    DesingData d = desingularize(*g, 3);
    UltraAlgebra tgt(d.graph, q);
    take(check_family(*g, desing_family(d, tgt), tgt, Axioms::uLP), true);
  }
  o.detail = std::to_string(checks) + " instances, " + std::to_string(skips) + " frontier skips" +
             (o.ok ? "" : "; " + o.detail);
  return o;
}

// 7. Identity suites.
Outcome identity_suites() {
  Outcome o;
  SuiteOptions opts;
  opts.eg.window = 4;
  opts.factors = 4;
  opts.word_length = 3;
  opts.samples = 20;
  opts.degree_bound = 3;
  auto grugrex = fixture("grugrex.ug");
  std::size_t skips = 0;
  auto take = [&](const Report& r) {
    o.expect(r.ok(), first_failure(r));
    o.expect(r.count(Status::Pass) > 0, r.suite + " on " + r.subject + ": nothing checked");
    skips += r.count(Status::Skip);
  };
  for (const char* s : {"lci", "corth", "lglg", "lglg2", "texlg", "tlgis_span"}) take(run_suite(s, grugrex, opts));
  for (const char* f : {"toy.ug", "ugr1.ug", "line3.ug"}) {
    take(run_suite("lci", fixture(f), opts));
    take(run_suite("texlg", fixture(f), opts));
  }
  if (o.ok) o.detail = std::to_string(skips) + " frontier skips";
  return o;
}

// 8. Simplicity verdicts on every graph with at most 3 vertices and 3 edges.
Outcome simplicity_oracle() {
  Outcome o;
  std::size_t acyclic = 0, no_l = 0;
  for (const auto& g : all_graphs(3, 3, false)) {
    Verdict v = simplicity_verdict(*g, Ring::prime_field(2));
    if (is_acyclic(*g)) {
      ++acyclic;
      bool brute = brute_force_simple(acyclic_matrix_rep(g, Ring::prime_field(2)));
      o.expect(v.result == truth_of(brute), g->name() + ": verdict disagrees with brute force");
      continue;
    }
    bool fails_l = oracle_cycle_without_exit(*g);
    o.expect(condition_L(*g).result == truth_of(!fails_l), g->name() + ": condition (L) disagrees with the oracle");
    if (!fails_l) continue;
    ++no_l;
    bool witness = false;
    for (const auto& w : v.witnesses) witness = witness || w.find("cycle") != std::string::npos;
    o.expect(v.result == Truth::False && witness, g->name() + ": missing cycle witness");
  }
  if (o.ok) o.detail = std::to_string(acyclic) + " acyclic, " + std::to_string(no_l) + " without (L)";
  return o;
}

// 9. Condition (L) transfers to the graph and the desingularization.
Outcome transfer() {
  Outcome o;
  std::mt19937_64 rng(9);
  RandomSpec spec;
  spec.max_vertices = 4;
  spec.max_edges = 5;
  spec.infinite_chance = 0.15;
  std::size_t decided = 0, skipped = 0;
  for (int i = 0; i < 50; ++i) {
    spec.nat = i % 3 == 2;
    spec.cofinite_chance = spec.nat ? 0.4 : 0.1;
    auto g = random_structure(rng, spec, "T" + std::to_string(i));
    Truth base = condition_L(*g).result;
    EGOptions opts;
    opts.window = 4;
    Truth eg = condition_L(*build_EG(g, opts).graph).result;
    Truth des = condition_L(*desingularize(*g, 3).graph).result;
    for (Truth t : {eg, des}) {
      if (base == Truth::Unknown || t == Truth::Unknown) {
        ++skipped;
        continue;
      }
      ++decided;
      o.expect(base == t, g->name() + ": condition (L) changes under the construction");
    }
  }
  o.detail = std::to_string(decided) + " decided, " + std::to_string(skipped) + " skipped" + (o.ok ? "" : "; " + o.detail);
  return o;
}

// 10. Sigma units and pin-down.
Outcome sigma_units_and_pin_down() {
  Outcome o;
  std::mt19937_64 rng(10);
  std::vector<std::shared_ptr<Structure>> gs = {fixture("toy.ug"), fixture("ugr1.ug"), fixture("grugrex.ug")};
  const std::size_t K = 24;
  std::size_t sampled = 0;
  for (const auto& g : gs) {
    UltraAlgebra alg(g, Ring::rationals());
    std::vector<UltraAlgebra::Element> t;
    for (std::size_t k = 1; k <= K; ++k) t.push_back(sigma_unit(alg, k));
    for (std::size_t k = 0; k < K; ++k) {
      o.expect(alg.equal(alg.mul(t[k], t[k]), t[k]), g->name() + ": t_k not idempotent");
      for (std::size_t l = 0; l <= k; ++l) {
        o.expect(alg.equal(alg.mul(t[k], t[l]), t[l]), g->name() + ": t_k t_l != t_l");
        o.expect(alg.equal(alg.mul(t[l], t[k]), t[l]), g->name() + ": t_l t_k != t_l");
      }
    }
    for (int i = 0; i < 17; ++i) {
      auto x = test::random_ultra(alg, rng);
      bool found = false;
      for (std::size_t k = 0; k < K && !found; ++k) found = alg.equal(alg.mul(alg.mul(t[k], x), t[k]), x);
      o.expect(found, g->name() + ": no t_k fixes " + alg.format(x));
      ++sampled;
    }
  }
  RandomSpec spec;
  spec.max_vertices = 4;
  spec.max_edges = 5;
  std::size_t pinned = 0;
  for (int attempt = 0; pinned < 100 && attempt < 400; ++attempt) {
    auto g = random_structure(rng, spec, "P" + std::to_string(attempt));
    UltraAlgebra alg(g, Ring::rationals());
    auto x = test::random_ultra(alg, rng);
    if (alg.is_zero(x)) continue;
    PinDown p = pin_down(alg, x);
    ++pinned;
    o.expect(alg.equal(alg.mul(alg.mul(p.a, x), p.b), p.form), g->name() + ": a x b != form for " + alg.format(x));
    o.expect(!alg.is_zero(p.form), g->name() + ": zero form");
    if (p.kind == PinDown::Kind::ScalarVertex) {
      o.expect(alg.equal(p.form, alg.scale(alg.vertex(p.v), p.scalar)), g->name() + ": form is not c p_v");
    } else {
      auto expect = alg.zero();
      Path c{p.v, p.cycle};
      auto power = alg.vertex(p.v);
      for (const Coef& coef : p.coeffs) {
        expect = alg.add(expect, alg.scale(alg.mul(power, alg.vertex(p.v)), coef));
        power = alg.mul(power, alg.path(c));
      }
      std::string cs;
      for (const Coef& coef : p.coeffs) cs += " " + coef.get_str();
      o.expect(alg.equal(p.form, expect), g->name() + ": form " + alg.format(p.form) + " is not the cycle polynomial" + cs +
                                              " of " + alg.format(alg.path(c)) + " for " + alg.format(x));
    }
  }
  o.expect(pinned == 100, "only " + std::to_string(pinned) + " nonzero samples");
  if (o.ok) o.detail = std::to_string(sampled) + " sigma samples, " + std::to_string(pinned) + " pinned";
  return o;
}

// 11. Corner idempotent on grugrex's graph.
Outcome corner() {
  Outcome o;
  auto g = fixture("grugrex.ug");
  EGOptions opts;
  opts.window = 4;
  EGData eg = build_EG(g, opts);
  const Structure& e = *eg.graph;
  GraphAlgebra alg(eg.graph, Ring::rationals());
  auto accepted = [&](Vertex u) {
    const EGNode& n = eg.vertex_node.at(u);
    return n.is_word ? n.w.is_initial() : eg.sigma.count(n.v) == 0;
  };
  // Shortest path into each vertex from an accepted one, by backward search.
  std::map<Vertex, Path> witness;
  std::vector<Vertex> frontier;
  for (Vertex u : e.finite_vertices())
    if (accepted(u)) {
      witness[u] = Path{u, {}};
      frontier.push_back(u);
    }
  while (!frontier.empty()) {
    std::vector<Vertex> next;
    for (Vertex u : frontier)
      for (EdgeId id : e.out_edges(u)) {
        Vertex w = e.target(id);
        if (witness.count(w)) continue;
        Path p = witness[u];
        p.edges.push_back(id);
        witness[w] = p;
        next.push_back(w);
      }
    frontier = next;
  }
  std::size_t checked = 0;
  for (const GraphMono& m : all_monomials(e, 2)) {
    auto x = alg.term(m);
    if (x.is_zero()) continue;
    ++checked;
    Vertex left = alg.source_of(m, true), right = alg.source_of(m, false);
    auto l = corner_project(eg, alg, x, Side::Left);
    auto r = corner_project(eg, alg, x, Side::Right);
    o.expect(alg.equal(l, accepted(left) ? x : alg.zero()), "left action on " + alg.format(x));
    o.expect(alg.equal(r, accepted(right) ? x : alg.zero()), "right action on " + alg.format(x));
    o.expect(alg.equal(corner_project(eg, alg, l, Side::Left), l), "not idempotent on " + alg.format(x));
    auto it = witness.find(left);
    if (it == witness.end()) {
      o.fail("no accepted vertex reaches " + e.vertex_name(left));
      continue;
    }
    auto mu = alg.path(it->second);
    auto back = alg.mul(alg.mul(alg.star(mu), corner_project(eg, alg, mu, Side::Left)), x);
    o.expect(alg.equal(back, x), "fullness witness fails for " + alg.format(x));
  }
  if (o.ok) o.detail = std::to_string(checked) + " monomials";
  return o;
}

// 12. DSL round trip and golden outputs.
Outcome cli_goldens() {
  Outcome o;
  std::mt19937_64 rng(12);
  for (int i = 0; i < 1000; ++i) {
    Document d = test::random_document(rng);
    std::string text = print_document(d);
    try {
      o.expect(parse_document(text) == d, "round trip changed:\n" + text);
    } catch (const ParseError& e) {
      o.fail(std::string("printed text does not parse: ") + e.what() + "\n" + text);
    }
  }
  cli::Options opts;
  opts.window = 4;
  for (const char* f : {"line3", "rose2", "ugr1", "toy", "grugrex"}) {
    Document doc = cli::read_document(test::fixture_path(std::string(f) + ".ug"));
    std::string name(f);
    o.expect(cli::analyze(doc, opts) == slurp(test::golden_path("analyze_" + name + ".txt")), "analyze " + name);
    o.expect(cli::construct("eg", doc, opts) == slurp(test::golden_path("construct_eg_" + name + ".ug")), "construct " + name);
    o.expect(cli::export_dot(doc, opts) == slurp(test::golden_path("dot_" + name + ".dot")), "export-dot " + name);
  }
  return o;
}

struct Criterion {
  int n;
  const char* name;
  double limit;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> all = {
      {1, "matrix-anchor", 60, matrix_anchor},
      {2, "full-matrix-blocks", 5, full_blocks},
      {3, "laurent-anchor", 5, laurent_anchor},
      {4, "associativity-fuzz", 60, associativity},
      {5, "eg-grugrex", 1, eg_grugrex},
      {6, "family-suites", 300, family_suites},
      {7, "identity-suites", 300, identity_suites},
      {8, "simplicity-vs-oracle", 60, simplicity_oracle},
      {9, "transfer", 60, transfer},
      {10, "sigma-units-pin-down", 60, sigma_units_and_pin_down},
      {11, "corner-idempotent", 10, corner},
      {12, "cli-round-trip-goldens", 30, cli_goldens},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failures = 0;
  for (const auto& c : all) {
    if (!only.empty() && !only.count(c.n)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (out.ok && secs > c.limit) out.fail("over the " + std::to_string(static_cast<int>(c.limit)) + " s limit");
    std::printf("[%s] %d %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", c.n, c.name, secs,
                out.detail.empty() ? "" : ": ", out.detail.c_str());
    std::fflush(stdout);
    failures += !out.ok;
  }
  return failures == 0 ? 0 : 1;
}
