#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <vector>

#include "lpa/graph_algebra.hpp"
#include "lpa/report.hpp"
#include "lpa/ring.hpp"
#include "lpa/structure.hpp"

namespace lpa {

// Dense square matrix with entries kept canonical in a ring.
struct Matrix {
  std::size_t n = 0;
  std::vector<Coef> a;

  static Matrix zero(std::size_t n) { return {n, std::vector<Coef>(n * n, Coef(0))}; }
  Coef& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const Coef& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  bool is_zero() const;
  bool operator==(const Matrix& o) const { return n == o.n && a == o.a; }
};

Matrix mat_mul(const Ring& ring, const Matrix& x, const Matrix& y);
Matrix mat_add(const Ring& ring, const Matrix& x, const Matrix& y);
Matrix mat_scale(const Ring& ring, const Matrix& x, const Coef& c);

// Action of a finite acyclic graph's algebra on the paths ending at sinks:
// t_e prepends e, t_e^* strips a leading e, q_v keeps paths starting at v.
struct MatrixRep {
  std::shared_ptr<const Structure> graph;
  Ring ring;
  std::vector<Path> basis;               // grouped by sink, sinks in index order
  std::vector<Vertex> sinks;
  std::vector<std::size_t> block_start;  // per sink
  std::vector<std::size_t> block_size;
  std::map<Path, std::size_t> index;

  std::size_t dimension() const { return basis.size(); }
  Matrix vertex(Vertex v) const;
  Matrix edge(EdgeId e) const;
  Matrix ghost(EdgeId e) const;
  Matrix of(const GraphAlgebra::Element& x) const;
};

MatrixRep acyclic_matrix_rep(std::shared_ptr<const Structure> g, const Ring& ring);

// Sum over sinks of the squared number of paths ending there.
std::size_t dim_acyclic(const Structure& g);
// Every t_a t_b^* with r(a) = r(b) that the normal form keeps.
std::vector<GraphMono> normal_basis(const GraphAlgebra& alg);
// Dimension of the span of the represented algebra.
std::size_t image_dimension(const MatrixRep& rep);

// Every nonzero element of the represented algebra generates it as a
// two-sided ideal. Finite fields only. Full matrix images and basis elements
// with proper ideals decide at once unless exhaustive; otherwise scans all elements.
bool brute_force_simple(const MatrixRep& rep, std::uint64_t max_elements = std::uint64_t{1} << 20,
                        bool exhaustive = false);

// Random products and zero tests through the symbolic engine and the matrices.
Report compare(const GraphAlgebra& alg, const MatrixRep& rep, std::size_t samples, std::uint64_t seed);
// Every t_a t_b^* with r(a) = r(b) and paths of length at most max_len.
std::vector<GraphMono> all_monomials(const Structure& g, std::size_t max_len);
// Sum of up to max_terms random monomials with random nonzero small coefficients.
GraphAlgebra::Element random_element(const GraphAlgebra& alg, const std::vector<GraphMono>& monos,
                                     std::mt19937_64& rng, std::size_t max_terms = 3);

// Laurent polynomial: exponent -> coefficient.
using Laurent = std::map<long, Coef>;

// One vertex with one loop: t_e -> x, t_e^* -> x^-1, q_v -> 1.
struct LaurentRep {
  const GraphAlgebra* alg = nullptr;
  EdgeId loop = 0;
  Laurent eval(const GraphAlgebra::Element& x) const;
  GraphAlgebra::Element lift(const Laurent& p) const;
};

LaurentRep laurent_rep(const GraphAlgebra& alg);
Laurent laurent_mul(const Ring& ring, const Laurent& a, const Laurent& b);

}  // namespace lpa
