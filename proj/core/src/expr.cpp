#include "lpa/expr.hpp"

#include <cctype>

#include "lpa/errors.hpp"

namespace lpa {

namespace {

Path path_of(const Structure& g, const std::vector<EdgeId>& edges) {
  return Path{g.edge(edges.front()).source, edges};
}

struct GraphOps {
  using Alg = GraphAlgebra;
  static GraphAlgebra::Element path(const Alg& a, const std::vector<EdgeId>& es) {
    const Structure& g = a.structure();
    Path p = path_of(g, es);
    if (!g.composable(p)) return a.zero();
    return a.path(p);
  }
  static GraphAlgebra::Element proj(const Alg& a, const VertexSet& s) {
    if (s.is_cofinite()) throw Error(ErrorKind::WrongShape, "cofinite projection in a graph algebra");
    auto x = a.zero();
    for (Vertex v : s.items()) x = a.add(x, a.vertex(v));
    return x;
  }
  static GraphAlgebra::Element unit(const Alg& a, const Coef& c) {
    const Structure& g = a.structure();
    if (g.is_nat()) throw Error(ErrorKind::WrongShape, "scalar without a unit");
    return a.scale(proj(a, g.full_set()), c);
  }
};

struct UltraOps {
  using Alg = UltraAlgebra;
  static UltraAlgebra::Element path(const Alg& a, const std::vector<EdgeId>& es) {
    const Structure& g = a.structure();
    Path p = path_of(g, es);
    if (!g.composable(p)) return a.zero();
    return a.path(p);
  }
  static UltraAlgebra::Element proj(const Alg& a, const VertexSet& s) { return a.proj(s); }
  static UltraAlgebra::Element unit(const Alg& a, const Coef& c) {
    const Structure& g = a.structure();
    if (g.is_nat()) throw Error(ErrorKind::WrongShape, "scalar without a unit");
    return a.scale(a.proj(g.full_set()), c);
  }
};

template <class Ops>
class ExprParser {
 public:
  using Alg = typename Ops::Alg;
  using Element = typename Alg::Element;

  ExprParser(const Alg& alg, const std::string& text) : alg_(alg), g_(alg.structure()), s_(text) {}

  Element run() {
    Element x = sum();
    skip();
    if (i_ < s_.size()) fail("'+', '*' or end of input");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const { throw ParseError(1, i_ + 1, expected); }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  void expect(char c) {
    if (!at(c)) fail(std::string("'") + c + "'");
    ++i_;
  }
  bool at_ident() {
    skip();
    return i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_');
  }
  std::string ident() {
    if (!at_ident()) fail("name");
    std::size_t j = i_;
    while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
    std::string out = s_.substr(i_, j - i_);
    i_ = j;
    return out;
  }
  bool keyword(const char* k) {
    skip();
    std::size_t n = std::char_traits<char>::length(k);
    if (s_.compare(i_, n, k) != 0) return false;
    std::size_t j = i_ + n;
    if (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) return false;
    i_ = j;
    return true;
  }

  Vertex vertex_ref() {
    std::size_t where = i_;
    std::string n = ident();
    auto v = g_.find_vertex(n);
    if (!v) throw Error(ErrorKind::MissingGeneratorAssignment, "unknown vertex " + n + " at column " + std::to_string(where + 1));
    return *v;
  }
  std::vector<EdgeId> edge_refs() {
    std::vector<EdgeId> out;
    do {
      std::string n = ident();
      auto e = g_.find_edge(n);
      if (!e) throw Error(ErrorKind::MissingGeneratorAssignment, "unknown edge " + n);
      out.push_back(*e);
    } while (at_ident());
    return out;
  }
  VertexSet set_ref() {
    if (keyword("cofinite")) {
      expect('{');
      std::vector<Vertex> vs;
      while (!at('}')) vs.push_back(vertex_ref());
      expect('}');
      return VertexSet::cofinite_of(g_.universe(), vs);
    }
    if (at('{')) {
      ++i_;
      std::vector<Vertex> vs;
      while (!at('}')) vs.push_back(vertex_ref());
      expect('}');
      return VertexSet::of(g_.universe(), vs);
    }
    return g_.single(vertex_ref());
  }

  Element atom() {
    skip();
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      Coef c(s_.substr(i_, j - i_));
      i_ = j;
      scalar_ = alg_.ring().mul(scalar_, c);
      return Element{};
    }
    if (keyword("star")) {
      expect('(');
      if (!keyword("s")) fail("'s'");
      expect('(');
      auto es = edge_refs();
      expect(')');
      expect(')');
      return alg_.star(Ops::path(alg_, es));
    }
    if (keyword("s")) {
      expect('(');
      auto es = edge_refs();
      expect(')');
      return Ops::path(alg_, es);
    }
    if (keyword("p")) {
      expect('(');
      VertexSet a = set_ref();
      expect(')');
      return Ops::proj(alg_, a);
    }
    if (keyword("q")) {
      expect('(');
      Vertex v = vertex_ref();
      expect(')');
      return Ops::proj(alg_, g_.single(v));
    }
    fail("atom");
  }

  // Integer atoms fold into a scalar; the product of the remaining atoms is
  // scaled at the end. A product of integers alone is a multiple of the unit.
  Element product() {
    scalar_ = Coef(1);
    bool negate = false;
    while (at('-')) {
      ++i_;
      negate = !negate;
    }
    std::optional<Element> acc;
    do {
      skip();
      bool number = i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
      Element a = atom();
      if (!number) acc = acc ? alg_.mul(*acc, a) : a;
    } while (at('*') && (++i_, true));
    Coef c = negate ? alg_.ring().neg(scalar_) : scalar_;
    if (!acc) return Ops::unit(alg_, c);
    return alg_.scale(*acc, c);
  }

  Element sum() {
    Element x = product();
    for (;;) {
      if (at('+')) {
        ++i_;
        x = alg_.add(x, product());
      } else if (at('-')) {
        ++i_;
        x = alg_.sub(x, product());
      } else {
        return x;
      }
    }
  }

  const Alg& alg_;
  const Structure& g_;
  std::string s_;
  std::size_t i_ = 0;
  Coef scalar_{1};
};

}  // namespace

GraphAlgebra::Element parse_graph_expr(const GraphAlgebra& alg, const std::string& expr) {
  return ExprParser<GraphOps>(alg, expr).run();
}

UltraAlgebra::Element parse_ultra_expr(const UltraAlgebra& alg, const std::string& expr) {
  return ExprParser<UltraOps>(alg, expr).run();
}

std::string eval_expr(std::shared_ptr<const Structure> g, const Ring& ring, const std::string& expr) {
  if (g->kind() == Kind::Graph) {
    GraphAlgebra alg(g, ring);
    return alg.format(alg.normalize(parse_graph_expr(alg, expr)));
  }
  UltraAlgebra alg(g, ring);
  return alg.format(alg.reduce(parse_ultra_expr(alg, expr)));
}

std::string eval_expr(const Document& doc, const std::string& structure, const Ring& ring,
                      const std::string& expr) {
  const StructureDecl* d = doc.find(structure);
  if (!d) throw Error(ErrorKind::InvalidStructure, "no structure named " + structure);
  return eval_expr(build(*d), ring, expr);
}

}  // namespace lpa
