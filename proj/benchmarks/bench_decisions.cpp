#include <benchmark/benchmark.h>

#include "turan/constructions.hpp"
#include "turan/family_m.hpp"
#include "turan/lagrangian.hpp"
#include "turan/random.hpp"
#include "turan/region.hpp"
#include "turan/search.hpp"
#include "turan/symmetrize.hpp"

using namespace turan;

static void BM_IsMFreeG2(benchmark::State& state) {
  Hypergraph h = make_g2(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_m_violation(h));
}
BENCHMARK(BM_IsMFreeG2)->Arg(8)->Arg(10)->Arg(12);

static void BM_IsMFreeRandom(benchmark::State& state) {
  Hypergraph h = random_hypergraph(9, 3, 0.4, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_m_violation(h));
}
BENCHMARK(BM_IsMFreeRandom)->Arg(3)->Arg(5);

static void BM_LagrangianAscent(benchmark::State& state) {
  Hypergraph g26 = make_g26();
  LagrangianConfig cfg;
  cfg.restarts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lagrangian_lower(g26, cfg));
}
BENCHMARK(BM_LagrangianAscent)->Arg(20)->Arg(200);

static void BM_LatticeCertificate(benchmark::State& state) {
  Hypergraph g26 = make_g26();
  for (auto _ : state)
    benchmark::DoNotOptimize(lagrangian_upper(g26, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LatticeCertificate)->Arg(30)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

static void BM_SearchSmall(benchmark::State& state) {
  SearchConfig cfg;
  cfg.n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(max_free_edges(cfg));
}
BENCHMARK(BM_SearchSmall)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_Symmetrize(benchmark::State& state) {
  Hypergraph h = random_hypergraph(static_cast<int>(state.range(0)), 3, 0.35, 11);
  for (auto _ : state) benchmark::DoNotOptimize(symmetrize(h));
}
BENCHMARK(BM_Symmetrize)->Arg(8)->Arg(10)->Arg(12);

static void BM_InducedCount(benchmark::State& state) {
  Hypergraph h = make_kostochka({static_cast<int>(state.range(0)), 2});
  for (auto _ : state) benchmark::DoNotOptimize(count_induced_k43_minus(h));
}
BENCHMARK(BM_InducedCount)->Arg(12)->Arg(24)->Arg(48);
