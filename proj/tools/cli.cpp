#include "cli.hpp"

#include <fstream>
#include <sstream>

#include "lpa/analysis.hpp"
#include "lpa/constructions.hpp"
#include "lpa/eg.hpp"
#include "lpa/errors.hpp"
#include "lpa/expr.hpp"
#include "lpa/suites.hpp"
#include "lpa/ultra_algebra.hpp"

namespace lpa::cli {

namespace {

const char* yes_no(Truth t) { return t == Truth::True ? "yes" : t == Truth::False ? "no" : "unknown"; }

std::vector<std::shared_ptr<Structure>> selected(const Document& doc, const Options& opts) {
  std::vector<std::shared_ptr<Structure>> out;
  for (const auto& s : doc.structures)
    if (opts.structure.empty() || s.name == opts.structure) out.push_back(build(s));
  if (out.empty()) throw Error(ErrorKind::InvalidStructure, "no structure named " + opts.structure);
  return out;
}

EGOptions eg_options(const Options& opts) {
  EGOptions o;
  o.window = opts.window;
  o.depth = opts.depth;
  if (opts.sigma == "file") o.user_sigma = true;
  else if (opts.sigma != "greedy") throw Error(ErrorKind::SigmaStrategyFailed, "unknown sigma strategy " + opts.sigma);
  return o;
}

SuiteOptions suite_options(const Options& opts) {
  SuiteOptions o;
  o.ring = Ring::parse(opts.ring);
  o.eg = eg_options(opts);
  o.degree_bound = opts.degree_bound;
  if (opts.depth) o.desing_depth = *opts.depth;
  o.seed = opts.seed;
  return o;
}

std::string set_list(const Structure& g, const std::vector<VertexSet>& sets) {
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const VertexSet& s = sets[i];
    std::string body = s.is_empty() ? "{}" : s.is_finite() && s.size() == 1
                                                 ? "{" + format_vertex_set(g, s) + "}"
                                                 : format_vertex_set(g, s);
    out += (i ? " | " : "") + body;
  }
  return out;
}

void analyze_one(const Structure& g, const Ring& ring, std::ostream& out) {
  out << "structure: " << g.name() << " (" << (g.kind() == Kind::Graph ? "graph" : "ultragraph") << ", "
      << (g.is_nat() ? "nat universe" : "finite universe") << ", " << g.edge_count() << (g.edge_count() == 1 ? " edge)\n" : " edges)\n");
  VertexSet sing = singular_vertices(g);
  out << "singular vertices: " << (sing.is_empty() ? "none" : format_vertex_set(g, sing)) << "\n";
  Verdict l = condition_L(g);
  out << "condition (L): " << yes_no(l.result) << "\n";
  for (const auto& w : l.witnesses) out << "  witness: " << w << "\n";
  std::string hs;
  try {
    hs = set_list(g, hereditary_saturated_subsets(g));
  } catch (const Error& e) {
    hs = std::string("not enumerated (") + e.what() + ")";
  }
  out << "hereditary saturated: " << hs << "\n";
  Verdict simple = simplicity_verdict(g, ring);
  for (const auto& w : simple.witnesses) out << "  simplicity witness: " << w << "\n";
  out << "unital: " << (is_unital(g) ? "yes" : "no") << "; simple: " << yes_no(simple.result) << "\n";
}

}  // namespace

Document read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, 0, "readable file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::string analyze(const Document& doc, const Options& opts) {
  Ring ring = Ring::parse(opts.ring);
  std::ostringstream out;
  bool first = true;
  for (const auto& g : selected(doc, opts)) {
    if (!first) out << "\n";
    first = false;
    analyze_one(*g, ring, out);
  }
  return out.str();
}

std::string construct(const std::string& kind, const Document& doc, const Options& opts) {
  Document result;
  for (const auto& g : selected(doc, opts)) {
    if (kind == "eg") {
      EGData eg = build_EG(g, eg_options(opts));
      StructureDecl d = to_decl(*eg.graph);
      d.sigma.clear();
      for (const auto& [v, w] : eg.sigma)
        if (eg.vertex_of(EGNode::base(v))) d.sigma.emplace_back(eg.node_name(EGNode::base(v)), w.bits);
      result.structures.push_back(std::move(d));
    } else if (kind == "gf") {
      std::vector<EdgeId> f;
      if (opts.edges.empty()) {
        for (EdgeId e = 0; e < g->edge_count(); ++e) f.push_back(e);
      } else {
        for (const auto& n : opts.edges) f.push_back(g->edge_id(n));
      }
      result.structures.push_back(to_decl(*build_GF(*g, f).graph));
    } else if (kind == "desing") {
      DesingData d = desingularize(*g, opts.depth.value_or(3));
      // Infinitely many sinks cannot get tails; refuse rather than emit a partial graph.
      if (!d.warnings.empty()) throw Error(ErrorKind::TruncationExceeded, d.warnings.front());
      result.structures.push_back(to_decl(*d.graph));
    } else {
      throw Error(ErrorKind::InvalidStructure, "unknown construction " + kind + " (eg, gf, desing)");
    }
  }
  return print_document(result);
}

std::string export_dot(const Document& doc, const Options& opts) {
  std::string out;
  for (const auto& g : selected(doc, opts)) out += to_dot(*g);
  return out;
}

Report verify(const std::string& suite, const Document& doc, const Options& opts) {
  SuiteOptions so = suite_options(opts);
  Report all;
  all.suite = suite;
  for (const auto& g : selected(doc, opts)) {
    Report r = run_suite(suite, g, so);
    all.subject += (all.subject.empty() ? "" : ",") + r.subject;
    all.merge(r);
  }
  return all;
}

std::string report(const Document& doc, const Options& opts, bool& ok) {
  SuiteOptions so = suite_options(opts);
  const auto& names = opts.suites.empty() ? suite_names() : opts.suites;
  std::string out;
  ok = true;
  for (const auto& g : selected(doc, opts)) {
    for (const auto& name : names) {
      Report r;
      try {
        r = run_suite(name, g, so);
      } catch (const Error& e) {
        r.suite = name;
        r.subject = g->name();
        r.add("suite", name, Status::Unknown, std::string(to_string(e.kind())) + ": " + e.what());
      }
      ok = ok && r.ok();
      out += to_jsonl(r);
    }
  }
  return out;
}

std::string eval(const Document& doc, const Options& opts, const std::string& expr) {
  auto gs = selected(doc, opts);
  return eval_expr(gs.front(), Ring::parse(opts.ring), expr) + "\n";
}

int exit_code(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return ParseFailure;
  if (const auto* err = dynamic_cast<const Error*>(&e))
    return err->kind() == ErrorKind::TruncationExceeded ? Truncation : Engine;
  return Engine;
}

}  // namespace lpa::cli
