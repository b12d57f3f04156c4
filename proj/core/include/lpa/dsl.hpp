#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lpa/structure.hpp"

namespace lpa {

struct VertexDecl {
  std::string name;
  std::optional<Vertex> index;  // nat universes: explicit @index
  bool operator==(const VertexDecl&) const = default;
};

struct TargetDecl {
  enum class Kind { Single, Set, Cofinite };
  Kind kind = Kind::Single;
  std::vector<std::string> ids;
  bool operator==(const TargetDecl&) const = default;
};

struct EdgeDecl {
  std::string name;
  std::string source;
  TargetDecl target;
  bool operator==(const EdgeDecl&) const = default;
};

// One structure as written. Declarations keep their order within each kind.
struct StructureDecl {
  lpa::Kind kind = lpa::Kind::Graph;
  std::string name;
  bool nat = false;
  bool universe_written = false;
  std::vector<VertexDecl> vertices;
  std::vector<std::string> infinite;   // vertices emitting undeclared edges
  std::vector<std::string> frontier;   // truncation boundary
  std::vector<EdgeDecl> edges;
  std::vector<std::pair<std::string, std::string>> sigma;  // vertex -> bit word
  bool operator==(const StructureDecl&) const = default;
};

struct Document {
  std::vector<StructureDecl> structures;
  bool operator==(const Document&) const = default;
  const StructureDecl* find(const std::string& name) const;
};

// Throws ParseError with the position of the first offending token.
Document parse_document(const std::string& text);
// Canonical text; parse_document(print_document(d)) == d.
std::string print_document(const Document& d);
std::string print_structure(const StructureDecl& s);

// Unknown vertices and similar reference errors, with the edge or vertex at fault.
std::vector<Violation> validate(const StructureDecl& s);
// Throws InvalidStructure listing the violations.
std::shared_ptr<Structure> build(const StructureDecl& s);
// Declaration of a built structure; nat vertices carry explicit indices.
StructureDecl to_decl(const Structure& g);

// DOT rendering; cofinite remainders point at a placeholder node.
std::string to_dot(const Structure& g);

}  // namespace lpa
