#include "lpa/analysis.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "lpa/errors.hpp"

namespace lpa {

namespace {

bool range_has_sink(const Structure& g, const VertexSet& r, bool& undecided) {
  if (r.is_cofinite()) return true;  // only finitely many vertices emit
  for (Vertex w : r.items()) {
    if (g.is_frontier(w)) {
      undecided = true;
      continue;
    }
    if (g.out_edges(w).empty() && !g.is_infinite_flagged(w)) return true;
  }
  return false;
}

bool wide(const VertexSet& r) { return r.is_cofinite() || r.size() > 1; }

// True, False, or Unknown when only a frontier vertex could supply the exit.
Truth exit_status(const Structure& g, const Path& cycle, ExitRule rule) {
  bool undecided = false;
  for (EdgeId e : cycle.edges) {
    Vertex s = g.edge(e).source;
    if (g.out_edges(s).size() > 1 || g.is_infinite_flagged(s)) return Truth::True;
    if (g.is_frontier(s)) undecided = true;
    const VertexSet& r = g.edge(e).range;
    if (rule == ExitRule::Standard && wide(r)) return Truth::True;
    if (range_has_sink(g, r, undecided)) return Truth::True;
  }
  return undecided ? Truth::Unknown : Truth::False;
}

std::string set_text(const Structure& g, const VertexSet& a) { return format_vertex_set(g, a); }

}  // namespace

bool cycle_has_exit(const Structure& g, const Path& cycle, ExitRule rule) {
  return exit_status(g, cycle, rule) == Truth::True;
}

Verdict condition_L(const Structure& g, ExitRule rule) {
  Verdict out;
  bool unknown = false, failed = false;
  for (const Path& c : find_simple_cycles(g)) {
    Truth t = exit_status(g, c, rule);
    if (t == Truth::True) continue;
    if (t == Truth::False) {
      failed = true;
      out.witnesses.push_back("cycle without exit: " + g.path_name(c));
    } else {
      unknown = true;
      out.witnesses.push_back("cycle with undecided exit: " + g.path_name(c));
    }
  }
  out.result = failed ? Truth::False : unknown ? Truth::Unknown : Truth::True;
  return out;
}

bool is_hereditary(const Structure& g, const VertexSet& m) {
  for (const Edge& e : g.edges())
    if (m.contains(e.source) && !e.range.subset_of(m)) return false;
  return true;
}

bool is_saturated(const Structure& g, const VertexSet& m) {
  for (Vertex v : g.sources()) {
    if (!g.is_regular(v) || m.contains(v)) continue;
    bool inside = true;
    for (EdgeId e : g.out_edges(v)) inside = inside && g.edge(e).range.subset_of(m);
    if (inside) return false;
  }
  return true;
}

std::vector<VertexSet> hereditary_saturated_subsets(const Structure& g, std::size_t max_vertices) {
  if (g.is_nat())
    throw Error(ErrorKind::TruncationExceeded, "hereditary saturated subsets need a finite universe");
  std::size_t n = g.vertex_count();
  if (n > max_vertices)
    throw Error(ErrorKind::TooLarge, "hereditary saturated scan is limited to " +
                                         std::to_string(max_vertices) + " vertices");
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> items;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) items.push_back(static_cast<Vertex>(i));
    VertexSet m = VertexSet::of(g.universe(), items);
    if (is_hereditary(g, m) && is_saturated(g, m)) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.items() < b.items();
  });
  return out;
}

VertexSet breaking_vertices(const Structure& g, const VertexSet& m) {
  std::vector<Vertex> out;
  for (Vertex v : g.infinite_flags()) {
    if (m.contains(v)) continue;
    for (EdgeId e : g.out_edges(v))
      if (!g.edge(e).range.subset_of(m)) {
        out.push_back(v);
        break;
      }
  }
  return VertexSet::of(g.universe(), out);
}

std::vector<AdmissiblePair> admissible_pairs(const Structure& g) {
  std::vector<AdmissiblePair> out;
  for (const VertexSet& h : hereditary_saturated_subsets(g)) {
    std::vector<Vertex> b = breaking_vertices(g, h).members();
    if (b.size() > 16) throw Error(ErrorKind::TooLarge, "too many breaking vertices");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << b.size()); ++mask) {
      std::vector<Vertex> s;
      for (std::size_t i = 0; i < b.size(); ++i)
        if (mask >> i & 1) s.push_back(b[i]);
      out.push_back({h, VertexSet::of(g.universe(), s)});
    }
  }
  return out;
}

bool is_unital(const Structure& g) {
  if (!g.is_nat()) return true;
  return g.kind() == Kind::Ultragraph && g.has_cofinite_range();
}

Verdict simplicity_verdict(const Structure& g, const Ring& ring) {
  Verdict out;
  if (!ring.is_field()) {
    out.witnesses.push_back("coefficient ring " + ring.name() + " is not a field");
    return out;
  }
  if (g.is_nat()) {
    out.witnesses.push_back("hereditary saturated lattice is not decidable on an infinite universe");
    return out;
  }
  if (!g.infinite_flags().empty() || !g.frontier_flags().empty()) {
    out.witnesses.push_back("flagged vertices carry undeclared edges");
    return out;
  }
  Verdict l = condition_L(g);
  out.witnesses = l.witnesses;
  bool trivial = true;
  for (const VertexSet& h : hereditary_saturated_subsets(g)) {
    if (h.is_empty() || h == g.full_set()) continue;
    trivial = false;
    out.witnesses.push_back("hereditary saturated: " + set_text(g, h));
  }
  if (l.result == Truth::False || !trivial)
    out.result = Truth::False;
  else
    out.result = l.result;
  return out;
}

Vertex find_supporting_vertex(const UltraAlgebra& alg, const UltraAlgebra::Element& x) {
  const Structure& g = alg.structure();
  if (alg.is_zero(x)) throw Error(ErrorKind::ZeroElement, "element is zero");
  std::vector<Vertex> candidates;
  if (g.is_nat()) {
    candidates = g.mentioned_vertices();
    candidates.push_back(g.next_free_index());
  } else {
    candidates = g.finite_vertices();
  }
  // Vertices touched by the last set of a term come first.
  std::vector<Vertex> first;
  for (const auto& [m, c] : x.terms) {
    VertexSet a = m.set;
    if (a.is_finite())
      for (Vertex v : a.items()) first.push_back(v);
  }
  for (Vertex v : candidates) first.push_back(v);
  for (Vertex v : first)
    if (!alg.is_zero(alg.mul(x, alg.vertex(v)))) return v;
  throw Error(ErrorKind::ZeroElement, "no vertex supports the element");
}

std::vector<std::vector<EdgeId>> simple_cycle_factors(const Structure& g,
                                                      const std::vector<EdgeId>& cycle) {
  std::vector<std::vector<EdgeId>> out;
  if (cycle.empty()) return out;
  Vertex base = g.edge(cycle.front()).source;
  std::vector<EdgeId> cur;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    cur.push_back(cycle[i]);
    bool closes = g.edge(cycle[i]).range.contains(base);
    bool next_at_base = i + 1 == cycle.size() || g.edge(cycle[i + 1]).source == base;
    if (closes && next_at_base) {
      out.push_back(cur);
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

namespace {

using UE = UltraAlgebra::Element;

class PinDownRun {
 public:
  PinDownRun(const UltraAlgebra& alg, const UE& x) : alg_(alg), x_(x) {}

  PinDown run() {
    const Structure& g = alg_.structure();
    if (alg_.is_zero(x_)) throw Error(ErrorKind::ZeroElement, "element is zero");
    y_ = alg_.reduce(x_);
    for (int step = 0; step < 256; ++step) {
      Vertex v = make_real_at_vertex();
      auto terms = real_terms(v);
      if (terms.size() == 1) return finish_scalar(terms[0], v);
      // Strip the shortest prefix, then keep only cycles at v.
      const std::vector<EdgeId> first = terms[0].first;
      if (!first.empty()) left(alg_.star(real_path(first)));
      left(alg_.vertex(v));
      y_ = alg_.reduce(y_);
      auto cyc = real_terms(v);
      if (cyc.size() < terms.size()) continue;
      if (cyc.size() == 1) return finish_scalar(cyc[0], v);
      // A path that kills some but not all cycle terms.
      if (auto nu = splitting_path(cyc)) {
        left(alg_.star(real_path(*nu)));
        right(real_path(*nu));
        continue;
      }
      // The cycles now form a chain of powers or share a first simple factor.
      std::vector<EdgeId> longest = cyc.back().first;
      auto factors = simple_cycle_factors(g, longest);
      const auto& gamma = factors.front();
      bool uniform = std::all_of(factors.begin(), factors.end(),
                                 [&](const auto& f) { return f == gamma; });
      if (uniform) {
        auto res = cycle_polynomial(cyc, gamma, v);
        if (res) return *res;
      }
      std::vector<EdgeId> other;
      for (const auto& f : factors)
        if (f != gamma) other = f;
      if (other.empty()) other = gamma;
      left(alg_.star(real_path(other)));
      right(alg_.mul(real_path(other), alg_.vertex(v)));
    }
    throw Error(ErrorKind::InvalidStructure, "pin-down did not settle");
  }

 private:
  // a and b start as the formal identity.
  void left(const UE& c) {
    a_ = a_ ? alg_.mul(c, *a_) : c;
    y_ = alg_.reduce(alg_.mul(c, y_));
  }
  void right(const UE& c) {
    b_ = b_ ? alg_.mul(*b_, c) : c;
    y_ = alg_.reduce(alg_.mul(y_, c));
  }

  UE real_path(const std::vector<EdgeId>& p) const {
    return alg_.path(Path{alg_.path_source(p), p});
  }

  static bool has_ghost(const UE& y) {
    return std::any_of(y.terms.begin(), y.terms.end(),
                       [](const auto& t) { return !t.first.beta.empty(); });
  }

  // Right-multiplies until y is a combination of s_alpha p_v.
  Vertex make_real_at_vertex() {
    const Structure& g = alg_.structure();
    for (int guard = 0; guard < 256; ++guard) {
      Vertex v = find_supporting_vertex(alg_, y_);
      right(alg_.vertex(v));
      if (!has_ghost(y_)) return v;
      std::set<EdgeId> firsts;
      for (const auto& [m, c] : y_.terms)
        if (!m.beta.empty()) firsts.insert(m.beta.front());
      bool moved = false;
      for (EdgeId e : firsts) {
        UE t = alg_.reduce(alg_.mul(y_, alg_.edge(e)));
        if (alg_.is_zero(t)) continue;
        right(alg_.edge(e));
        moved = true;
        break;
      }
      if (moved) continue;
      for (EdgeId f : g.out_edges(v)) {
        if (firsts.count(f)) continue;
        UE t = alg_.reduce(alg_.mul(y_, alg_.edge(f)));
        if (alg_.is_zero(t)) continue;
        right(alg_.edge(f));
        moved = true;
        break;
      }
      if (!moved) throw Error(ErrorKind::InvalidStructure, "no edge removes the ghost terms");
    }
    throw Error(ErrorKind::InvalidStructure, "ghost removal did not settle");
  }

  // Terms c s_alpha p_v, merged by alpha and ordered by length.
  std::vector<std::pair<std::vector<EdgeId>, Coef>> real_terms(Vertex v) const {
    const Ring& ring = alg_.ring();
    std::map<std::pair<std::size_t, std::vector<EdgeId>>, Coef> merged;
    for (const auto& [m, c] : y_.terms) {
      if (!m.beta.empty() || !m.set.contains(v))
        throw Error(ErrorKind::InvalidStructure, "pin-down lost its vertex support");
      auto key = std::make_pair(m.alpha.size(), m.alpha);
      auto it = merged.find(key);
      merged[key] = it == merged.end() ? c : ring.add(it->second, c);
    }
    std::vector<std::pair<std::vector<EdgeId>, Coef>> out;
    for (const auto& [k, c] : merged)
      if (!ring.is_zero(c)) out.push_back({k.second, c});
    return out;
  }

  std::optional<std::vector<EdgeId>> splitting_path(
      const std::vector<std::pair<std::vector<EdgeId>, Coef>>& cyc) const {
    const Structure& g = alg_.structure();
    std::vector<std::vector<EdgeId>> candidates;
    for (const auto& [beta, c] : cyc) {
      if (beta.empty()) continue;
      candidates.push_back(beta);
      for (auto& f : simple_cycle_factors(g, beta)) candidates.push_back(f);
    }
    for (const auto& nu : candidates) {
      std::size_t dead = 0, total = 0;
      for (const auto& [beta, c] : cyc) {
        if (beta.empty()) continue;
        ++total;
        if (alg_.is_zero(alg_.mul(alg_.star(real_path(nu)), real_path(beta)))) ++dead;
      }
      if (dead > 0 && dead < total) return nu;
    }
    return std::nullopt;
  }

  std::optional<PinDown> cycle_polynomial(const std::vector<std::pair<std::vector<EdgeId>, Coef>>& cyc,
                                          const std::vector<EdgeId>& gamma, Vertex v) {
    PinDown out;
    out.kind = PinDown::Kind::CyclePolynomial;
    out.v = v;
    out.cycle = gamma;
    for (const auto& [beta, c] : cyc) {
      if (beta.size() % gamma.size() != 0) return std::nullopt;
      std::size_t k = beta.size() / gamma.size();
      for (std::size_t i = 0; i < beta.size(); ++i)
        if (beta[i] != gamma[i % gamma.size()]) return std::nullopt;
      if (out.coeffs.size() <= k) out.coeffs.resize(k + 1, Coef(0));
      out.coeffs[k] = c;
    }
    out.form = cycle_form(gamma, out.coeffs, v);
    left(alg_.vertex(v));
    return verified(std::move(out));
  }

  UE cycle_form(const std::vector<EdgeId>& gamma, const std::vector<Coef>& coeffs, Vertex v) const {
    UE out;
    std::vector<EdgeId> power;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      UE piece = power.empty() ? alg_.vertex(v) : alg_.mul(real_path(power), alg_.vertex(v));
      out = alg_.add(out, alg_.scale(piece, coeffs[k]));
      power.insert(power.end(), gamma.begin(), gamma.end());
    }
    return out;
  }

  PinDown finish_scalar(const std::pair<std::vector<EdgeId>, Coef>& term, Vertex v) {
    if (!term.first.empty()) left(alg_.star(real_path(term.first)));
    left(alg_.vertex(v));
    PinDown out;
    out.kind = PinDown::Kind::ScalarVertex;
    out.scalar = term.second;
    out.v = v;
    out.form = alg_.scale(alg_.vertex(v), term.second);
    return verified(std::move(out));
  }

  PinDown verified(PinDown out) const {
    out.a = *a_;
    out.b = *b_;
    UE lhs = alg_.mul(alg_.mul(out.a, x_), out.b);
    if (!alg_.equal(lhs, out.form) || alg_.is_zero(out.form))
      throw Error(ErrorKind::InvalidStructure, "pin-down result does not re-verify");
    return out;
  }

  const UltraAlgebra& alg_;
  UE x_;
  std::optional<UE> a_, b_;
  UE y_;
};

}  // namespace

PinDown pin_down(const UltraAlgebra& alg, const UltraAlgebra::Element& x) {
  return PinDownRun(alg, x).run();
}

}  // namespace lpa
