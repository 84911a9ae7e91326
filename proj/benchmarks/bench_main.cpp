#include <benchmark/benchmark.h>

#include "mods/bounds.hpp"
#include "mods/families.hpp"
#include "mods/orientation.hpp"
#include "mods/random.hpp"
#include "mods/solver.hpp"

namespace {

void BM_ExactRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const mods::Digraph d = mods::random_digraph(n, 0.15, 42);
  for (auto _ : state) benchmark::DoNotOptimize(mods::gamma_m_plus(d).value);
}
BENCHMARK(BM_ExactRandom)->Arg(16)->Arg(32)->Arg(48)->Arg(64)->Arg(100);

void BM_OracleRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const mods::Digraph d = mods::random_digraph(n, 0.15, 42);
  for (auto _ : state) benchmark::DoNotOptimize(mods::gamma_m_plus(d, mods::Method::oracle).value);
}
BENCHMARK(BM_OracleRandom)->Arg(12)->Arg(16)->Arg(20);

void BM_GreedyRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const mods::Digraph d = mods::random_digraph(n, 0.1, 42);
  for (auto _ : state) benchmark::DoNotOptimize(mods::greedy_mods(d).value);
}
BENCHMARK(BM_GreedyRandom)->Arg(64)->Arg(256)->Arg(1024);

void BM_BoundReport(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const mods::Digraph d = mods::random_digraph(n, 0.3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(mods::bound_report(d).all_hold());
}
BENCHMARK(BM_BoundReport)->Arg(10)->Arg(14)->Arg(18);

// 2^m orientations, one solve each.
void BM_SpectrumCycle(benchmark::State& state) {
  const mods::Graph g = mods::cycle_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mods::spectrum(g).max_value);
}
BENCHMARK(BM_SpectrumCycle)->Arg(10)->Arg(14)->Arg(18);

void BM_UpperOrientablePruned(benchmark::State& state) {
  const mods::Graph g = mods::cycle_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mods::upper_orientable_number(g).value);
}
BENCHMARK(BM_UpperOrientablePruned)->Arg(10)->Arg(14)->Arg(18);

}  // namespace

BENCHMARK_MAIN();
