#include <benchmark/benchmark.h>

#include "turan/constructions.hpp"
#include "turan/hypergraph.hpp"
#include "turan/random.hpp"

using namespace turan;

static void BM_Shadow(benchmark::State& state) {
  Hypergraph h = make_g1(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(shadow(h));
}
BENCHMARK(BM_Shadow)->Arg(30)->Arg(60)->Arg(120);

static void BM_LinkDegrees(benchmark::State& state) {
  Hypergraph h = make_g2(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    long long total = 0;
    for (int v = 0; v < h.vertex_count(); ++v) total += degree(h, v);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_LinkDegrees)->Arg(12)->Arg(24)->Arg(48);

static void BM_ContainsK53Minus(benchmark::State& state) {
  Hypergraph pattern = make_k53_minus();
  Hypergraph host = random_hypergraph(static_cast<int>(state.range(0)), 3, 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(contains_subgraph(pattern, host));
}
BENCHMARK(BM_ContainsK53Minus)->Arg(8)->Arg(10)->Arg(12);

static void BM_Transversal(benchmark::State& state) {
  Hypergraph h = random_hypergraph(8, 3, 0.35, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(transversal_number(h));
}
BENCHMARK(BM_Transversal)->Arg(1)->Arg(2);

static void BM_Blowup(benchmark::State& state) {
  Hypergraph g26 = make_g26();
  BlowupSpec spec;
  spec.part_sizes.assign(6, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(blowup(g26, spec));
}
BENCHMARK(BM_Blowup)->Arg(2)->Arg(5)->Arg(10);
