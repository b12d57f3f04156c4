#include "lpa/random_structures.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lpa {

namespace {

std::vector<std::string> vertex_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool chance(std::mt19937_64& rng, double p) { return p > 0 && std::bernoulli_distribution(p)(rng); }

std::vector<Vertex> sample_distinct(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(k, n));
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

std::shared_ptr<Structure> random_structure(std::mt19937_64& rng, const RandomSpec& spec,
                                            const std::string& name) {
  std::size_t n = uniform(rng, spec.min_vertices, spec.max_vertices);
  std::size_t lo = std::max(spec.min_edges, spec.no_singular ? n : std::size_t{0});
  std::size_t m = uniform(rng, lo, std::max(lo, spec.max_edges));
  auto names = vertex_names(n);
  std::shared_ptr<Structure> g;
  if (spec.nat && !spec.no_singular) {
    g = std::make_shared<Structure>(Structure::nat(name, spec.kind));
    for (std::size_t i = 0; i < n; ++i) g->add_vertex(names[i], static_cast<Vertex>(i));
  } else {
    g = std::make_shared<Structure>(Structure::finite(name, spec.kind, names));
  }
  std::optional<Vertex> sink;
  if (spec.want_sink && !spec.no_singular && n > 1) sink = static_cast<Vertex>(uniform(rng, 0, n - 1));
  std::vector<Vertex> emitters;
  for (std::size_t i = 0; i < n; ++i)
    if (!sink || *sink != i) emitters.push_back(static_cast<Vertex>(i));
  for (std::size_t k = 0; k < m; ++k) {
    Vertex src = spec.no_singular && k < n ? static_cast<Vertex>(k)
                                           : emitters[uniform(rng, 0, emitters.size() - 1)];
    std::string en = "e" + std::to_string(k + 1);
    if (spec.kind == Kind::Graph) {
      g->add_graph_edge(en, src, static_cast<Vertex>(uniform(rng, 0, n - 1)));
      continue;
    }
    bool cof = chance(rng, spec.cofinite_chance);
    if (cof) {
      std::size_t excl = uniform(rng, 0, std::min(spec.max_range, g->is_nat() ? n : n - 1));
      g->add_edge(en, src, VertexSet::cofinite_of(g->universe(), sample_distinct(rng, n, excl)));
    } else {
      std::size_t size = uniform(rng, 1, std::max<std::size_t>(1, std::min(spec.max_range, n)));
      g->add_edge(en, src, VertexSet::of(g->universe(), sample_distinct(rng, n, size)));
    }
  }
  if (!spec.no_singular)
    for (std::size_t i = 0; i < n; ++i)
      if (chance(rng, spec.infinite_chance)) g->flag_infinite(static_cast<Vertex>(i));
  return g;
}

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

EdgeList canonical(std::size_t n, const EdgeList& edges) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  EdgeList best;
  bool first = true;
  do {
    EdgeList mapped;
    for (auto [s, t] : edges) mapped.emplace_back(perm[s], perm[t]);
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) best = mapped;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool acyclic(std::size_t n, const EdgeList& edges) {
  std::vector<int> indeg(n, 0);
  for (auto [s, t] : edges) ++indeg[t];
  std::vector<Vertex> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (!indeg[v]) ready.push_back(static_cast<Vertex>(v));
  std::size_t seen = 0;
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    ++seen;
    for (auto [s, t] : edges)
      if (s == v && --indeg[t] == 0) ready.push_back(t);
  }
  return seen == n;
}

}  // namespace

std::vector<std::shared_ptr<Structure>> all_graphs(std::size_t max_vertices, std::size_t max_edges,
                                                   bool acyclic_only) {
  std::vector<std::shared_ptr<Structure>> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    EdgeList pairs;
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) pairs.emplace_back(static_cast<Vertex>(s), static_cast<Vertex>(t));
    std::set<EdgeList> seen;
    // Multisets of pairs as nondecreasing index sequences.
    std::vector<std::size_t> idx;
    auto emit = [&](const EdgeList& edges) {
      if (acyclic_only && !acyclic(n, edges)) return;
      EdgeList c = canonical(n, edges);
      if (!seen.insert(c).second) return;
      auto g = std::make_shared<Structure>(
          Structure::finite("G" + std::to_string(out.size()), Kind::Graph, vertex_names(n)));
      for (std::size_t k = 0; k < c.size(); ++k)
        g->add_graph_edge("e" + std::to_string(k + 1), c[k].first, c[k].second);
      out.push_back(g);
    };
    auto rec = [&](auto&& self, std::size_t from, EdgeList& cur) -> void {
      emit(cur);
      if (cur.size() == max_edges) return;
      for (std::size_t i = from; i < pairs.size(); ++i) {
        cur.push_back(pairs[i]);
        self(self, i, cur);
        cur.pop_back();
      }
    };
    EdgeList cur;
    rec(rec, 0, cur);
  }
  return out;
}

std::shared_ptr<Structure> line_graph(std::size_t n) {
  auto g = std::make_shared<Structure>(Structure::finite("line" + std::to_string(n), Kind::Graph, vertex_names(n)));
  for (std::size_t i = 0; i + 1 < n; ++i)
    g->add_graph_edge("e" + std::to_string(i + 1), static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return g;
}

std::shared_ptr<Structure> parallel_graph(std::size_t n) {
  auto g = std::make_shared<Structure>(Structure::finite("parallel" + std::to_string(n), Kind::Graph, vertex_names(2)));
  for (std::size_t i = 0; i < n; ++i) g->add_graph_edge("e" + std::to_string(i + 1), 0, 1);
  return g;
}

std::shared_ptr<Structure> rose_graph(std::size_t n) {
  auto g = std::make_shared<Structure>(Structure::finite("rose" + std::to_string(n), Kind::Graph, vertex_names(1)));
  for (std::size_t i = 0; i < n; ++i) g->add_graph_edge("e" + std::to_string(i + 1), 0, 0);
  return g;
}

}  // namespace lpa
