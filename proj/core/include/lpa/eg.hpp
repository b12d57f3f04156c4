#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lpa/graph_algebra.hpp"
#include "lpa/structure.hpp"

namespace lpa {

// Bit word over the edge enumeration; bit i records membership in r(e_i).
struct Word {
  std::string bits;

  std::size_t length() const { return bits.size(); }
  // 1-based, as in the enumeration e_1, e_2, ...
  bool bit(std::size_t i) const { return bits.at(i - 1) == '1'; }
  Word prefix(std::size_t n) const { return Word{bits.substr(0, n)}; }
  Word child(bool b) const { return Word{bits + (b ? '1' : '0')}; }
  bool is_zero() const { return bits.find('1') == std::string::npos; }
  // 0^{n-1} 1
  bool is_initial() const { return !bits.empty() && bits.back() == '1' && bits.find('1') == bits.size() - 1; }

  std::strong_ordering operator<=>(const Word& o) const {
    if (auto c = bits.size() <=> o.bits.size(); c != 0) return c;
    return bits <=> o.bits;
  }
  bool operator==(const Word&) const = default;
};

// r(w): intersection of ranges at 1-bits minus the union at 0-bits.
VertexSet word_range(const Structure& g, const Word& w);

// A vertex of the constructed graph: a source vertex or a word.
struct EGNode {
  bool is_word = false;
  Vertex v = 0;
  Word w;

  static EGNode base(Vertex v) { return {false, v, {}}; }
  static EGNode word(Word w) { return {true, 0, std::move(w)}; }
  auto operator<=>(const EGNode&) const = default;
  bool operator==(const EGNode&) const = default;
};

struct EGOptions {
  std::size_t window = 4;               // anonymous indices kept up to this bound
  std::optional<std::size_t> depth;     // longest emitted word; default min(#edges, 4)
  std::size_t capacity = 1;             // greedy preimage bound per word
  bool user_sigma = false;              // take sigma from the structure's table
};

struct EGData {
  std::shared_ptr<const Structure> source;
  std::shared_ptr<const Structure> graph;
  std::size_t window_limit = 0;  // Nat mode: indices 0..window_limit are kept
  std::size_t depth = 0;
  std::size_t edge_count = 0;
  std::size_t capacity = 1;
  bool user_sigma = false;

  std::vector<Word> delta;                 // sorted by (length, bits)
  std::map<Word, VertexSet> word_ranges;   // r(w) for w in delta
  std::vector<Word> gamma0, gamma_plus;
  VertexSet w_plus, w_zero;
  std::vector<Vertex> window;              // kept source vertices, index order
  std::map<Vertex, Word> sigma;
  std::map<Word, std::size_t> load;        // window preimage counts

  std::vector<std::vector<EGNode>> x_table;  // X(e_n) at index n-1, window part
  std::vector<bool> x_complete;              // no member lies outside the window
  std::vector<bool> x_emitted;               // every member is a vertex of graph

  std::map<EGNode, Vertex> node_vertex;
  std::vector<EGNode> vertex_node;
  std::map<Vertex, EdgeId> vertex_edge;             // e_v
  std::map<Word, EdgeId> word_edge;                 // e_w
  std::map<std::pair<EdgeId, EGNode>, EdgeId> pair_edge;  // (e_n, x)
  std::vector<std::string> warnings;

  bool in_delta(const Word& w) const { return word_ranges.count(w) != 0; }
  bool in_gamma0(const Word& w) const { return in_delta(w) && w.is_initial(); }
  bool in_window(Vertex v) const;
  std::optional<Vertex> vertex_of(const EGNode& n) const;
  // Sources accepted by the corner idempotent: W0 vertices and Gamma0 words.
  bool accepted_source(Vertex graph_vertex) const;
  std::string node_name(const EGNode& n) const;
};

EGData build_EG(std::shared_ptr<const Structure> g, const EGOptions& opts = {});

// The path in the subgraph F ending at x that starts in W0 or Gamma0.
Path alpha_path(const EGData& eg, const EGNode& x);
// Exhaustive reverse search for every such path (uniqueness check).
std::vector<Path> alpha_paths_exhaustive(const EGData& eg, const EGNode& x);

// Window vertices v with |sigma(v)| >= |w| and sigma(v) restricted to |w| equal to w.
VertexSet r_prime(const EGData& eg, const Word& w);

// All vertices of the constructed graph, keeping only the e_v and e_w edges.
Structure subgraph_F(const EGData& eg);

enum class Side { Left, Right, Both };

// Term filter by the source of alpha (left), of beta (right), or both.
GraphAlgebra::Element corner_project(const EGData& eg, const GraphAlgebra& alg,
                                     const GraphAlgebra::Element& x, Side side);

}  // namespace lpa
