#include <benchmark/benchmark.h>

#include <random>

#include "eca/bruteforce.hpp"
#include "eca/environment.hpp"
#include "eca/far.hpp"
#include "eca/feasibility.hpp"
#include "eca/grid.hpp"
#include "eca/tester.hpp"

using namespace eca;

static void BM_EvolveStep(benchmark::State& state) {
  std::mt19937_64 rng(1);
  auto c = Configuration::random(state.range(0), rng);
  const Rule maj = parse_rule("maj");
  for (auto _ : state) {
    c = evolve_step(c, maj);
    benchmark::DoNotOptimize(c.words().data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvolveStep)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 20);

static void BM_GridFeasibility(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto& meta = builtin_meta(state.range(1) ? "maj" : "or");
  const Index n = state.range(0);
  auto pl = plan(n, n, 0.1, paper_constants()).params;
  Configuration c = random_initial(n, rng, true);
  for (Index t = 0; t < pl.t1; ++t) c = evolve_step(c, meta.rule);
  auto gv = grid_view_of(c, meta, pl.t1, pl.grid);
  for (auto _ : state) benchmark::DoNotOptimize(check_feasible(meta, gv, pl).feasible);
  state.SetItemsProcessed(state.iterations() * static_cast<Index>(pl.grid.size()));
}
BENCHMARK(BM_GridFeasibility)->Args({9600, 1})->Args({9600, 0})->Args({96000, 1});

static void BM_GridTester(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const Index n = state.range(0);
  const auto& meta = builtin_meta("maj");
  auto env = evolve(random_initial(n, rng, true), meta.rule, n);
  Rng trng(4);
  for (auto _ : state) {
    QueryOracle o(env);
    benchmark::DoNotOptimize(test(o, meta, 0.1, trng, paper_constants()).accepted());
  }
}
BENCHMARK(BM_GridTester)->Arg(9600)->Unit(benchmark::kMillisecond);

static void BM_WideTester(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const auto& meta = builtin_meta("fih");
  Rng trng(6);
  for (auto _ : state) {
    auto base = std::make_shared<LazyEnvironment>(random_initial(64, rng, false), meta.rule, 4000);
    TiledEnvironment env(base, Index{1} << 34);
    QueryOracle o(env);
    benchmark::DoNotOptimize(test_wide(o, meta, 0.2, trng, lab_constants()).accepted());
  }
}
BENCHMARK(BM_WideTester)->Unit(benchmark::kMillisecond);

static void BM_ExactDistance(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::vector<Configuration> rows;
  for (int t = 0; t < 8; ++t) rows.push_back(Configuration::random(state.range(0), rng));
  Environment env(rows);
  for (auto _ : state) benchmark::DoNotOptimize(bruteforce::exact_distance(env, parse_rule("maj"), 1).differing);
}
BENCHMARK(BM_ExactDistance)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
