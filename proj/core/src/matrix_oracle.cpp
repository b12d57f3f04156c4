#include "lpa/matrix_oracle.hpp"

#include <algorithm>
#include <array>

#include "lpa/errors.hpp"

namespace lpa {

bool Matrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Coef& c) { return sgn(c) == 0; });
}

Matrix mat_mul(const Ring& ring, const Matrix& x, const Matrix& y) {
  Matrix out = Matrix::zero(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t k = 0; k < x.n; ++k) {
      if (sgn(x.at(i, k)) == 0) continue;
      for (std::size_t j = 0; j < x.n; ++j)
        if (sgn(y.at(k, j)) != 0) out.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  for (auto& c : out.a) c = ring.canon(c);
  return out;
}

Matrix mat_add(const Ring& ring, const Matrix& x, const Matrix& y) {
  Matrix out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = ring.add(out.a[i], y.a[i]);
  return out;
}

Matrix mat_scale(const Ring& ring, const Matrix& x, const Coef& c) {
  Matrix out = x;
  for (auto& e : out.a) e = ring.mul(e, c);
  return out;
}

namespace {

void require_acyclic_graph(const Structure& g) {
  if (g.is_nat()) throw Error(ErrorKind::WrongShape, "matrix oracle needs a finite universe");
  for (const Edge& e : g.edges())
    if (e.range.is_cofinite() || e.range.size() != 1)
      throw Error(ErrorKind::WrongShape, "matrix oracle needs single-vertex ranges");
  if (!is_acyclic(g)) throw Error(ErrorKind::NotAcyclic, g.name() + " has a cycle");
}

std::vector<Path> all_paths(const Structure& g, std::size_t max_len) {
  std::vector<Path> out;
  for (Vertex v : g.finite_vertices())
    for (Path& p : enumerate_paths(g, v, max_len)) out.push_back(std::move(p));
  return out;
}

bool has_prefix(const std::vector<EdgeId>& p, const std::vector<EdgeId>& pre) {
  return pre.size() <= p.size() && std::equal(pre.begin(), pre.end(), p.begin());
}

}  // namespace

MatrixRep acyclic_matrix_rep(std::shared_ptr<const Structure> g, const Ring& ring) {
  require_acyclic_graph(*g);
  MatrixRep rep;
  rep.graph = g;
  rep.ring = ring;
  std::vector<Path> paths = all_paths(*g, g->vertex_count());
  for (Vertex w : g->finite_vertices()) {
    if (!g->out_edges(w).empty()) continue;
    rep.sinks.push_back(w);
    rep.block_start.push_back(rep.basis.size());
    std::vector<Path> block;
    for (const Path& p : paths)
      if (g->end_vertex(p) == w) block.push_back(p);
    std::sort(block.begin(), block.end(), [](const Path& a, const Path& b) {
      if (a.length() != b.length()) return a.length() < b.length();
      return a < b;
    });
    rep.block_size.push_back(block.size());
    for (Path& p : block) {
      rep.index[p] = rep.basis.size();
      rep.basis.push_back(std::move(p));
    }
  }
  return rep;
}

Matrix MatrixRep::of(const GraphAlgebra::Element& x) const {
  const Structure& g = *graph;
  Matrix out = Matrix::zero(basis.size());
  for (const auto& [m, c] : x.terms) {
    for (std::size_t col = 0; col < basis.size(); ++col) {
      const Path& mu = basis[col];
      if (m.beta.empty() ? mu.start != m.v : !has_prefix(mu.edges, m.beta)) continue;
      Path nu{m.alpha.empty() ? m.v : g.edge(m.alpha.front()).source, m.alpha};
      nu.edges.insert(nu.edges.end(), mu.edges.begin() + static_cast<long>(m.beta.size()), mu.edges.end());
      auto it = index.find(nu);
      if (it == index.end()) continue;  // not composable
      out.at(it->second, col) = ring.add(out.at(it->second, col), c);
    }
  }
  return out;
}

Matrix MatrixRep::vertex(Vertex v) const {
  GraphAlgebra::Element x;
  x.terms[GraphMono{{}, {}, v}] = Coef(1);
  return of(x);
}

Matrix MatrixRep::edge(EdgeId e) const {
  GraphAlgebra::Element x;
  x.terms[GraphMono{{e}, {}, graph->target(e)}] = Coef(1);
  return of(x);
}

Matrix MatrixRep::ghost(EdgeId e) const {
  GraphAlgebra::Element x;
  x.terms[GraphMono{{}, {e}, graph->target(e)}] = Coef(1);
  return of(x);
}

std::size_t dim_acyclic(const Structure& g) {
  require_acyclic_graph(g);
  std::vector<Path> paths = all_paths(g, g.vertex_count());
  std::size_t total = 0;
  for (Vertex w : g.finite_vertices()) {
    if (!g.out_edges(w).empty()) continue;
    std::size_t n = static_cast<std::size_t>(
        std::count_if(paths.begin(), paths.end(), [&](const Path& p) { return g.end_vertex(p) == w; }));
    total += n * n;
  }
  return total;
}

std::vector<GraphMono> all_monomials(const Structure& g, std::size_t max_len) {
  std::map<Vertex, std::vector<Path>> by_end;
  for (Path& p : all_paths(g, max_len)) by_end[g.end_vertex(p)].push_back(std::move(p));
  std::vector<GraphMono> out;
  for (const auto& [v, ps] : by_end)
    for (const Path& a : ps)
      for (const Path& b : ps) out.push_back(GraphMono{a.edges, b.edges, v});
  return out;
}

std::vector<GraphMono> normal_basis(const GraphAlgebra& alg) {
  const Structure& g = alg.structure();
  require_acyclic_graph(g);
  std::vector<GraphMono> out;
  for (const GraphMono& m : all_monomials(g, g.vertex_count())) {
    if (!m.alpha.empty() && !m.beta.empty() && m.alpha.back() == m.beta.back()) {
      auto special = alg.special_edge(g.edge(m.alpha.back()).source);
      if (special && *special == m.alpha.back()) continue;
    }
    out.push_back(m);
  }
  return out;
}

namespace {

// Row-reduces vectors one at a time; returns the rank so far.
class RankTracker {
 public:
  RankTracker(const Ring& ring, std::size_t width) : ring_(ring), width_(width) {}

  bool add(std::vector<Coef> v) {
    for (const auto& [col, row] : rows_) {
      if (sgn(v[col]) == 0) continue;
      Coef f = v[col];
      for (std::size_t j = 0; j < width_; ++j) v[j] = ring_.sub(v[j], ring_.mul(f, row[j]));
    }
    for (std::size_t j = 0; j < width_; ++j) {
      if (sgn(v[j]) == 0) continue;
      Coef inv = ring_.inv(v[j]);
      for (auto& c : v) c = ring_.mul(c, inv);
      for (auto& [col, row] : rows_) {
        if (sgn(row[j]) == 0) continue;
        Coef f = row[j];
        for (std::size_t k = 0; k < width_; ++k) row[k] = ring_.sub(row[k], ring_.mul(f, v[k]));
      }
      rows_.emplace_back(j, std::move(v));
      return true;
    }
    return false;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  const Ring& ring_;
  std::size_t width_;
  std::vector<std::pair<std::size_t, std::vector<Coef>>> rows_;
};

std::vector<Matrix> basis_images(const MatrixRep& rep) {
  GraphAlgebra alg(rep.graph, rep.ring);
  std::vector<Matrix> out;
  for (const GraphMono& m : normal_basis(alg)) {
    GraphAlgebra::Element x;
    x.terms[m] = Coef(1);
    out.push_back(rep.of(x));
  }
  return out;
}

// GF(2) matrices of size at most 8, one byte per row.
using Bits = std::uint64_t;

Bits to_bits(const Matrix& m) {
  Bits out = 0;
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j)
      if (sgn(m.at(i, j)) != 0) out |= Bits{1} << (8 * i + j);
  return out;
}

Bits bits_mul(Bits x, Bits y, std::size_t n) {
  Bits out = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Bits row = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (x >> (8 * i + k) & 1) row ^= y >> (8 * k) & 0xff;
    out |= row << (8 * i);
  }
  return out;
}

bool ideal_is_everything_gf2(Bits x, const std::vector<Bits>& basis, std::size_t n) {
  std::array<Bits, 64> pivots{};
  std::size_t rank = 0;
  for (Bits a : basis) {
    Bits ax = bits_mul(a, x, n);
    if (!ax) continue;
    for (Bits b : basis) {
      Bits v = bits_mul(ax, b, n);
      for (int bit = 63; bit >= 0 && v; --bit)
        if (v >> bit & 1) {
          if (!pivots[bit]) {
            pivots[bit] = v;
            ++rank;
            break;
          }
          v ^= pivots[bit];
        }
      if (rank == basis.size()) return true;
    }
  }
  return rank == basis.size();
}

}  // namespace

std::size_t image_dimension(const MatrixRep& rep) {
  std::size_t n = rep.dimension();
  RankTracker t(rep.ring, n * n);
  for (const Matrix& m : basis_images(rep)) t.add(m.a);
  return t.rank();
}

bool brute_force_simple(const MatrixRep& rep, std::uint64_t max_elements, bool exhaustive) {
  if (rep.ring.kind() != RingKind::PrimeField)
    throw Error(ErrorKind::RingMismatch, "brute-force simplicity needs a prime field");
  std::size_t n = rep.dimension();
  std::vector<Matrix> basis;
  RankTracker span(rep.ring, n * n);
  for (Matrix& m : basis_images(rep))
    if (span.add(m.a)) basis.push_back(std::move(m));
  std::size_t d = basis.size();
  if (d == 0) return false;
  // A subalgebra of M_n(K) of dimension n^2 is all of M_n(K).
  if (!exhaustive && d == n * n) return true;
  auto ideal_rank = [&](const Matrix& x) {
    RankTracker t(rep.ring, n * n);
    for (const Matrix& a : basis) {
      Matrix ax = mat_mul(rep.ring, a, x);
      if (!ax.is_zero())
        for (const Matrix& b : basis) t.add(mat_mul(rep.ring, ax, b).a);
    }
    return t.rank();
  };
  // A spanning element with a proper ideal settles the question.
  if (!exhaustive)
    for (const Matrix& x : basis)
      if (ideal_rank(x) < d) return false;
  unsigned long q = rep.ring.modulus();
  long double count = 1;
  for (std::size_t i = 0; i < d; ++i) count *= q;
  if (count > static_cast<long double>(max_elements))
    throw Error(ErrorKind::TooLarge, "algebra of dimension " + std::to_string(d) + " is too large to scan");
  if (q == 2 && n <= 8) {
    std::vector<Bits> b;
    for (const Matrix& m : basis) b.push_back(to_bits(m));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << d); ++mask) {
      Bits x = 0;
      for (std::size_t i = 0; i < d; ++i)
        if (mask >> i & 1) x ^= b[i];
      if (!ideal_is_everything_gf2(x, b, n)) return false;
    }
    return true;
  }
  std::vector<unsigned long> digits(d, 0);
  auto next = [&] {
    for (std::size_t i = 0; i < d; ++i) {
      if (++digits[i] < q) return true;
      digits[i] = 0;
    }
    return false;
  };
  while (next()) {
    Matrix x = Matrix::zero(n);
    for (std::size_t i = 0; i < d; ++i)
      if (digits[i]) x = mat_add(rep.ring, x, mat_scale(rep.ring, basis[i], Coef(digits[i])));
    RankTracker t(rep.ring, n * n);
    bool full = false;
    for (const Matrix& a : basis) {
      Matrix ax = mat_mul(rep.ring, a, x);
      if (ax.is_zero()) continue;
      for (const Matrix& b : basis) {
        t.add(mat_mul(rep.ring, ax, b).a);
        if (t.rank() == d) {
          full = true;
          break;
        }
      }
      if (full) break;
    }
    if (!full) return false;
  }
  return true;
}

GraphAlgebra::Element random_element(const GraphAlgebra& alg, const std::vector<GraphMono>& monos,
                                     std::mt19937_64& rng, std::size_t max_terms) {
  GraphAlgebra::Element x;
  if (monos.empty()) return x;
  std::size_t terms = std::uniform_int_distribution<std::size_t>(1, max_terms)(rng);
  for (std::size_t i = 0; i < terms; ++i) {
    const GraphMono& m = monos[std::uniform_int_distribution<std::size_t>(0, monos.size() - 1)(rng)];
    long c = std::uniform_int_distribution<long>(-3, 3)(rng);
    if (c == 0) c = 1;
    x = alg.add(x, alg.term(m, Coef(c)));
  }
  return x;
}

Report compare(const GraphAlgebra& alg, const MatrixRep& rep, std::size_t samples, std::uint64_t seed) {
  const Structure& g = alg.structure();
  const Ring& ring = alg.ring();
  Report out{"matrix-compare", g.name() + " over " + ring.name(), {}, {}};
  std::mt19937_64 rng(seed);
  auto monos = all_monomials(g, g.vertex_count());
  auto check = [&](const std::string& group, const std::string& id, bool ok, const std::string& why) {
    out.add(group, id, ok ? Status::Pass : Status::Fail, ok ? "" : why);
  };
  for (std::size_t i = 0; i < samples; ++i) {
    auto a = random_element(alg, monos, rng), b = random_element(alg, monos, rng);
    auto ab = alg.mul(a, b);
    Matrix lhs = rep.of(ab), rhs = mat_mul(ring, rep.of(a), rep.of(b));
    std::string id = std::to_string(i);
    check("product", id, lhs == rhs, alg.format(a) + " * " + alg.format(b));
    check("zero-test", id, ab.is_zero() == lhs.is_zero(), alg.format(ab));
    auto na = alg.normalize(a);
    check("normal-form", id, rep.of(na) == rep.of(a) && na.is_zero() == rep.of(a).is_zero(), alg.format(a));
  }
  for (Vertex v : g.finite_vertices()) {
    if (!g.is_regular(v)) continue;
    auto x = alg.vertex(v);
    for (EdgeId e : g.out_edges(v)) x = alg.sub(x, alg.mul(alg.edge(e), alg.ghost(e)));
    check("relation", g.vertex_name(v), alg.is_zero(x) && rep.of(x).is_zero(), alg.format(x));
  }
  for (Vertex v : g.finite_vertices()) {
    for (unsigned long r = 1; r < std::max<unsigned long>(2, std::min<unsigned long>(ring.modulus(), 4)); ++r) {
      auto x = alg.scale(alg.vertex(v), Coef(static_cast<long>(r)));
      check("nonzero", std::to_string(r) + "*" + g.vertex_name(v), !alg.is_zero(x) && !rep.of(x).is_zero(),
            alg.format(x));
    }
  }
  return out;
}

Laurent laurent_mul(const Ring& ring, const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) out[i + j] = ring.add(out[i + j], ring.mul(x, y));
  for (auto it = out.begin(); it != out.end();) it = ring.is_zero(it->second) ? out.erase(it) : std::next(it);
  return out;
}

LaurentRep laurent_rep(const GraphAlgebra& alg) {
  const Structure& g = alg.structure();
  if (g.is_nat() || g.vertex_count() != 1 || g.edge_count() != 1)
    throw Error(ErrorKind::WrongShape, "Laurent representation needs one vertex with one loop");
  return LaurentRep{&alg, 0};
}

Laurent LaurentRep::eval(const GraphAlgebra::Element& x) const {
  const Ring& ring = alg->ring();
  Laurent out;
  for (const auto& [m, c] : x.terms) {
    long d = static_cast<long>(m.alpha.size()) - static_cast<long>(m.beta.size());
    out[d] = ring.add(out[d], c);
  }
  for (auto it = out.begin(); it != out.end();) it = ring.is_zero(it->second) ? out.erase(it) : std::next(it);
  return out;
}

GraphAlgebra::Element LaurentRep::lift(const Laurent& p) const {
  GraphAlgebra::Element out;
  for (const auto& [d, c] : p) {
    std::vector<EdgeId> power(static_cast<std::size_t>(d < 0 ? -d : d), loop);
    GraphMono m{d > 0 ? power : std::vector<EdgeId>{}, d < 0 ? power : std::vector<EdgeId>{}, 0};
    out = alg->add(out, alg->term(m, c));
  }
  return out;
}

}  // namespace lpa
