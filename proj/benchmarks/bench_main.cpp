#include <benchmark/benchmark.h>

#include <random>

#include "lpa/dsl.hpp"
#include "lpa/eg.hpp"
#include "lpa/graph_algebra.hpp"
#include "lpa/matrix_oracle.hpp"
#include "lpa/random_structures.hpp"

namespace {

const char* kGrugrex = R"(ultragraph grugrex {
  universe nat;
  vertices v0 v1 v2 v3 v4;
  edge e1: v0 -> cofinite { v0 w1 w2 w3 w4 w5 w6 w7 w8 w9 w10 w11 w12 w13 };
  edge e2: v1 -> w1;  edge e3: v2 -> w2;  edge e4: w1 -> w3;  edge e5: w3 -> w4;
  edge e6: w2 -> w5;  edge e7: v3 -> w6;  edge e8: v4 -> w7;  edge e9: w6 -> w8;
  edge e10: w5 -> w9; edge e11: w4 -> w10; edge e12: w9 -> w11; edge e13: w8 -> w12;
  edge e14: w7 -> w13;
}
)";

void BM_GraphMultiply(benchmark::State& state) {
  auto g = lpa::rose_graph(static_cast<std::size_t>(state.range(0)));
  lpa::GraphAlgebra alg(g, lpa::Ring::rationals());
  auto monos = lpa::all_monomials(*g, 2);
  std::mt19937_64 rng(7);
  for (auto _ : state) {
    auto a = lpa::random_element(alg, monos, rng, 4);
    auto b = lpa::random_element(alg, monos, rng, 4);
    benchmark::DoNotOptimize(alg.normalize(alg.mul(a, b)));
  }
}
BENCHMARK(BM_GraphMultiply)->Arg(1)->Arg(2)->Arg(3);

void BM_BuildEG(benchmark::State& state) {
  auto g = lpa::build(lpa::parse_document(kGrugrex).structures.at(0));
  lpa::EGOptions opts;
  opts.window = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lpa::build_EG(g, opts));
}
BENCHMARK(BM_BuildEG)->Arg(2)->Arg(4);

void BM_BruteForceSimple(benchmark::State& state) {
  auto g = lpa::line_graph(static_cast<std::size_t>(state.range(0)));
  auto rep = lpa::acyclic_matrix_rep(g, lpa::Ring::prime_field(2));
  for (auto _ : state) benchmark::DoNotOptimize(lpa::brute_force_simple(rep, std::uint64_t{1} << 20, true));
}
BENCHMARK(BM_BruteForceSimple)->Arg(2)->Arg(3);

void BM_ParsePrint(benchmark::State& state) {
  for (auto _ : state) {
    auto doc = lpa::parse_document(kGrugrex);
    benchmark::DoNotOptimize(lpa::print_document(doc));
  }
}
BENCHMARK(BM_ParsePrint);

}  // namespace
BENCHMARK_MAIN();
