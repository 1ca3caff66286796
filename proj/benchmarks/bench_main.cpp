#include <benchmark/benchmark.h>

#include "laglab/canonical.hpp"
#include "laglab/degree_squares.hpp"
#include "laglab/extremal_search.hpp"
#include "laglab/lagrangian.hpp"

namespace {

using namespace laglab;

void BM_AscendColexTail(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  const RGraph g = colex_segment(binomial(t, 3) - 3, 3).with_vertex_count(t);
  SolverConfig cfg;
  for (auto _ : state) {
    auto res = ascend(g, Weighting::uniform(t), cfg);
    benchmark::DoNotOptimize(res.value);
  }
}
BENCHMARK(BM_AscendColexTail)->Arg(10)->Arg(20)->Arg(30);

void BM_MaximizeLagrangian(benchmark::State& state) {
  const RGraph g = colex_segment(static_cast<std::uint64_t>(state.range(0)), 3);
  SolverConfig cfg;
  cfg.starts = 16;
  for (auto _ : state) benchmark::DoNotOptimize(maximize_lagrangian(g, cfg).value);
}
BENCHMARK(BM_MaximizeLagrangian)->Arg(11)->Arg(20)->Arg(40);

void BM_CanonicalForm(benchmark::State& state) {
  const RGraph g = lex_segment(static_cast<std::uint64_t>(state.range(0)), 9, 3);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g).edges.size());
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(20)->Arg(40);

void BM_EnumerateLeftCompressed(benchmark::State& state) {
  const auto m = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_left_compressed(3, m, 7).size());
}
BENCHMARK(BM_EnumerateLeftCompressed)->Arg(6)->Arg(12)->Arg(20);

void BM_IsoClasses(benchmark::State& state) {
  const auto m = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all_up_to_iso(3, m, 6).size());
}
BENCHMARK(BM_IsoClasses)->Arg(3)->Arg(5);

void BM_P2Bounded(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(p2_max_bounded(3, 11, 7).value);
}
BENCHMARK(BM_P2Bounded)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
