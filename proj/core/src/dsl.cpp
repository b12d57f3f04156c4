#include "lpa/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "lpa/errors.hpp"

namespace lpa {

const StructureDecl* Document::find(const std::string& name) const {
  for (const auto& s : structures)
    if (s.name == name) return &s;
  return nullptr;
}

namespace {

struct Token {
  enum class Kind { Ident, Number, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t line = 1, col = 1;
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    std::size_t j = i;
    if (std::isalpha(c) || c == '_') {
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.kind = Token::Kind::Ident;
    } else if (std::isdigit(c)) {
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Token::Kind::Number;
    } else if (src.compare(i, 2, "->") == 0) {
      j = i + 2;
      t.kind = Token::Kind::Punct;
    } else if (std::string("{};:@").find(static_cast<char>(c)) != std::string::npos) {
      j = i + 1;
      t.kind = Token::Kind::Punct;
    } else {
      throw ParseError(line, col, "token");
    }
    t.text = src.substr(i, j - i);
    advance(j - i);
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Document document() {
    Document d;
    std::set<std::string> names;
    while (peek().kind != Token::Kind::End) {
      const Token& head = peek();
      StructureDecl s = structure();
      if (!names.insert(s.name).second) throw ParseError(head.line, head.col, "unique structure name");
      d.structures.push_back(std::move(s));
    }
    return d;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(peek().line, peek().col, expected);
  }
  bool is(const char* text) const { return peek().kind != Token::Kind::End && peek().text == text; }
  void expect(const char* text) {
    if (!is(text)) fail(std::string("'") + text + "'");
    ++pos_;
  }
  std::string ident(const char* what) {
    if (peek().kind != Token::Kind::Ident) fail(what);
    return take().text;
  }

  StructureDecl structure() {
    StructureDecl s;
    if (is("graph")) s.kind = Kind::Graph;
    else if (is("ultragraph")) s.kind = Kind::Ultragraph;
    else fail("'graph' or 'ultragraph'");
    ++pos_;
    s.name = ident("structure name");
    expect("{");
    while (!is("}")) {
      if (peek().kind == Token::Kind::End) fail("'}'");
      decl(s);
    }
    expect("}");
    return s;
  }

  void decl(StructureDecl& s) {
    if (is("universe")) {
      ++pos_;
      if (is("finite")) s.nat = false;
      else if (is("nat")) s.nat = true;
      else fail("'finite' or 'nat'");
      ++pos_;
      s.universe_written = true;
      expect(";");
    } else if (is("vertices")) {
      ++pos_;
      do {
        VertexDecl v{ident("vertex name"), std::nullopt};
        if (is("@")) {
          ++pos_;
          if (peek().kind != Token::Kind::Number) fail("index");
          v.index = static_cast<Vertex>(std::stoul(take().text));
        }
        s.vertices.push_back(std::move(v));
      } while (!is(";"));
      expect(";");
    } else if (is("infinite") || is("frontier")) {
      auto& list = is("infinite") ? s.infinite : s.frontier;
      ++pos_;
      do list.push_back(ident("vertex name"));
      while (!is(";"));
      expect(";");
    } else if (is("edge")) {
      ++pos_;
      EdgeDecl e;
      e.name = ident("edge name");
      expect(":");
      e.source = ident("vertex name");
      expect("->");
      e.target = target(s.kind);
      expect(";");
      s.edges.push_back(std::move(e));
    } else if (is("sigma")) {
      ++pos_;
      expect("{");
      while (!is("}")) {
        std::string v = ident("vertex name");
        expect("->");
        if (peek().kind != Token::Kind::Number || peek().text.find_first_not_of("01") != std::string::npos)
          fail("bit word");
        s.sigma.emplace_back(std::move(v), take().text);
        expect(";");
      }
      expect("}");
    } else {
      fail("declaration");
    }
  }

  TargetDecl target(Kind kind) {
    TargetDecl t;
    if (peek().kind == Token::Kind::Ident && !is("cofinite")) {
      t.kind = TargetDecl::Kind::Single;
      t.ids.push_back(take().text);
      return t;
    }
    if (kind == Kind::Graph) fail("vertex name");
    if (is("cofinite")) {
      ++pos_;
      t.kind = TargetDecl::Kind::Cofinite;
      expect("{");
      while (!is("}")) t.ids.push_back(ident("vertex name"));
      expect("}");
      return t;
    }
    t.kind = TargetDecl::Kind::Set;
    expect("{");
    if (is("}")) fail("nonempty range");
    while (!is("}")) t.ids.push_back(ident("vertex name"));
    expect("}");
    return t;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : " ") + x;
  return out;
}

std::string target_text(const TargetDecl& t) {
  switch (t.kind) {
    case TargetDecl::Kind::Single: return t.ids.front();
    case TargetDecl::Kind::Set: return "{ " + join(t.ids) + " }";
    case TargetDecl::Kind::Cofinite: return t.ids.empty() ? "cofinite { }" : "cofinite { " + join(t.ids) + " }";
  }
  return {};
}

bool anonymous_name(const std::string& n) {
  return n.size() > 1 && n[0] == '_' && n.find_first_not_of("0123456789", 1) == std::string::npos;
}

// Vertex names in the order indices are handed out.
std::vector<std::string> references(const StructureDecl& s) {
  std::vector<std::string> out;
  for (const auto& v : s.vertices) out.push_back(v.name);
  for (const auto& e : s.edges) {
    out.push_back(e.source);
    for (const auto& t : e.target.ids) out.push_back(t);
  }
  for (const auto& n : s.infinite) out.push_back(n);
  for (const auto& n : s.frontier) out.push_back(n);
  for (const auto& [n, w] : s.sigma) out.push_back(n);
  return out;
}

}  // namespace

Document parse_document(const std::string& text) { return Parser(lex(text)).document(); }

std::string print_structure(const StructureDecl& s) {
  std::ostringstream out;
  out << (s.kind == Kind::Graph ? "graph " : "ultragraph ") << s.name << " {\n";
  if (s.universe_written) out << "  universe " << (s.nat ? "nat" : "finite") << ";\n";
  if (!s.vertices.empty()) {
    out << "  vertices";
    for (const auto& v : s.vertices) {
      out << ' ' << v.name;
      if (v.index) out << '@' << *v.index;
    }
    out << ";\n";
  }
  if (!s.infinite.empty()) out << "  infinite " << join(s.infinite) << ";\n";
  if (!s.frontier.empty()) out << "  frontier " << join(s.frontier) << ";\n";
  for (const auto& e : s.edges) out << "  edge " << e.name << ": " << e.source << " -> " << target_text(e.target) << ";\n";
  if (!s.sigma.empty()) {
    out << "  sigma {";
    for (const auto& [v, w] : s.sigma) out << ' ' << v << " -> " << w << ';';
    out << " }\n";
  }
  out << "}\n";
  return out.str();
}

std::string print_document(const Document& d) {
  std::string out;
  for (std::size_t i = 0; i < d.structures.size(); ++i) {
    if (i) out += "\n";
    out += print_structure(d.structures[i]);
  }
  return out;
}

std::vector<Violation> validate(const StructureDecl& s) {
  std::vector<Violation> out;
  std::set<std::string> declared;
  for (const auto& v : s.vertices) {
    if (!declared.insert(v.name).second) out.push_back({v.name, "duplicate vertex"});
    if (s.nat && anonymous_name(v.name)) out.push_back({v.name, "names of the form _N are reserved"});
    if (v.index && !s.nat) out.push_back({v.name, "index needs a nat universe"});
  }
  if (s.nat) {
    std::set<Vertex> used;
    for (const auto& v : s.vertices)
      if (v.index && !used.insert(*v.index).second) out.push_back({v.name, "index already named"});
  }
  auto known = [&](const std::string& n) { return s.nat || declared.count(n) != 0; };
  std::set<std::string> edge_names;
  for (const auto& e : s.edges) {
    if (!edge_names.insert(e.name).second) out.push_back({e.name, "duplicate edge"});
    if (!known(e.source)) out.push_back({e.name, "unknown vertex " + e.source});
    for (const auto& t : e.target.ids)
      if (!known(t)) out.push_back({e.name, "unknown vertex " + t});
    if (!s.nat && e.target.kind == TargetDecl::Kind::Cofinite && e.target.ids.size() >= declared.size())
      out.push_back({e.name, "empty range"});
  }
  for (const auto* list : {&s.infinite, &s.frontier})
    for (const auto& n : *list)
      if (!known(n)) out.push_back({n, "unknown vertex " + n});
  for (const auto& [n, w] : s.sigma)
    if (!known(n)) out.push_back({n, "unknown vertex " + n});
  return out;
}

std::shared_ptr<Structure> build(const StructureDecl& s) {
  auto violations = validate(s);
  if (!violations.empty()) {
    std::string msg = s.name + ":";
    for (const auto& v : violations) msg += " " + v.where + ": " + v.message + ";";
    throw Error(ErrorKind::InvalidStructure, msg);
  }
  std::shared_ptr<Structure> g;
  if (s.nat) {
    g = std::make_shared<Structure>(Structure::nat(s.name, s.kind));
    std::set<Vertex> used;
    for (const auto& v : s.vertices)
      if (v.index) used.insert(*v.index);
    for (const auto& n : references(s))
      if (anonymous_name(n)) used.insert(static_cast<Vertex>(std::stoul(n.substr(1))));
    for (const auto& v : s.vertices)
      if (v.index) g->add_vertex(v.name, *v.index);
    Vertex next = 0;
    for (const auto& n : references(s)) {
      if (g->find_vertex(n)) continue;
      while (used.count(next)) ++next;
      g->add_vertex(n, next);
      used.insert(next);
    }
  } else {
    std::vector<std::string> names;
    for (const auto& v : s.vertices) names.push_back(v.name);
    g = std::make_shared<Structure>(Structure::finite(s.name, s.kind, names));
  }
  auto ids = [&](const std::vector<std::string>& xs) {
    std::vector<Vertex> out;
    for (const auto& x : xs) out.push_back(g->vertex(x));
    return out;
  };
  for (const auto& e : s.edges) {
    VertexSet r;
    switch (e.target.kind) {
      case TargetDecl::Kind::Single: r = g->single(g->vertex(e.target.ids.front())); break;
      case TargetDecl::Kind::Set: r = VertexSet::of(g->universe(), ids(e.target.ids)); break;
      case TargetDecl::Kind::Cofinite: r = VertexSet::cofinite_of(g->universe(), ids(e.target.ids)); break;
    }
    g->add_edge(e.name, g->vertex(e.source), r);
  }
  for (const auto& n : s.infinite) g->flag_infinite(g->vertex(n));
  for (const auto& n : s.frontier) g->flag_frontier(g->vertex(n));
  for (const auto& [n, w] : s.sigma) g->set_sigma(g->vertex(n), w);
  auto post = validate(*g);
  if (!post.empty()) {
    std::string msg = s.name + ":";
    for (const auto& v : post) msg += " " + v.where + ": " + v.message + ";";
    throw Error(ErrorKind::InvalidStructure, msg);
  }
  return g;
}

StructureDecl to_decl(const Structure& g) {
  StructureDecl s;
  s.kind = g.kind();
  s.name = g.name();
  s.nat = g.is_nat();
  s.universe_written = true;
  if (g.is_nat()) {
    for (const auto& [v, n] : g.named_vertices()) s.vertices.push_back({n, v});
  } else {
    for (Vertex v : g.finite_vertices()) s.vertices.push_back({g.vertex_name(v), std::nullopt});
  }
  for (Vertex v : g.infinite_flags()) s.infinite.push_back(g.vertex_name(v));
  for (Vertex v : g.frontier_flags()) s.frontier.push_back(g.vertex_name(v));
  for (const Edge& e : g.edges()) {
    EdgeDecl d{e.name, g.vertex_name(e.source), {}};
    if (e.range.is_cofinite()) {
      d.target.kind = TargetDecl::Kind::Cofinite;
    } else if (e.range.size() == 1) {
      d.target.kind = TargetDecl::Kind::Single;
    } else {
      d.target.kind = TargetDecl::Kind::Set;
    }
    for (Vertex v : e.range.items()) d.target.ids.push_back(g.vertex_name(v));
    s.edges.push_back(std::move(d));
  }
  for (const auto& [v, w] : g.sigma_table()) s.sigma.emplace_back(g.vertex_name(v), w);
  return s;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Structure& g) {
  std::ostringstream out;
  out << "digraph " << quoted(g.name()) << " {\n";
  std::vector<Vertex> nodes = g.is_nat() ? g.mentioned_vertices() : g.finite_vertices();
  for (Vertex v : nodes) {
    out << "  " << quoted(g.vertex_name(v));
    std::vector<std::string> attrs;
    if (g.is_infinite_flagged(v)) attrs.push_back("peripheries=2");
    if (g.is_frontier(v)) attrs.push_back("style=dashed");
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
      out << "]";
    }
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    std::string src = quoted(g.vertex_name(e.source));
    std::string label = " [label=" + quoted(e.name) + "];\n";
    if (e.range.is_finite()) {
      for (Vertex w : e.range.items()) out << "  " << src << " -> " << quoted(g.vertex_name(w)) << label;
      continue;
    }
    for (Vertex w : nodes)
      if (e.range.contains(w)) out << "  " << src << " -> " << quoted(g.vertex_name(w)) << label;
    std::string rest = quoted("⋯ " + e.name);
    out << "  " << rest << " [label=\"⋯\", shape=plaintext];\n";
    out << "  " << src << " -> " << rest << label;
  }
  out << "}\n";
  return out.str();
}

}  // namespace lpa
