#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "lpa/structure.hpp"

namespace lpa {

struct RandomSpec {
  Kind kind = Kind::Ultragraph;
  bool nat = false;
  std::size_t min_vertices = 1, max_vertices = 4;
  std::size_t min_edges = 1, max_edges = 5;
  std::size_t max_range = 3;     // explicit vertices per range
  double cofinite_chance = 0.0;  // ultragraphs: range written as a complement
  double infinite_chance = 0.0;  // flag a vertex as an infinite emitter
  bool no_singular = false;      // finite universe, every vertex emits, no flags
  bool want_sink = false;        // keep at least one vertex without out-edges
};

// Vertices v0.., edges e1..; ranges nonempty.
std::shared_ptr<Structure> random_structure(std::mt19937_64& rng, const RandomSpec& spec,
                                            const std::string& name = "R");

// Every graph on 1..max_vertices vertices with 0..max_edges edges, one per
// isomorphism class (loops and parallel edges included).
std::vector<std::shared_ptr<Structure>> all_graphs(std::size_t max_vertices, std::size_t max_edges,
                                                   bool acyclic_only);

// Line graph v0 -> v1 -> ... with n vertices.
std::shared_ptr<Structure> line_graph(std::size_t n);
// Two vertices joined by n parallel edges.
std::shared_ptr<Structure> parallel_graph(std::size_t n);
// One vertex with n loops.
std::shared_ptr<Structure> rose_graph(std::size_t n);

}  // namespace lpa
