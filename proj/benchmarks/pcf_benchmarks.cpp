#include <benchmark/benchmark.h>

#include "pcf/fractional.hpp"
#include "pcf/generate.hpp"
#include "pcf/graph.hpp"
#include "pcf/opt_verify.hpp"
#include "pcf/solvers.hpp"
#include "pcf/stirling.hpp"

namespace {

pcf::ConflictInstance with_neighborhoods(pcf::Graph g) {
  pcf::Hypergraph h = pcf::neighborhood_hypergraph(g);
  return {std::move(g), std::move(h)};
}

void BM_StirlingRow(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    pcf::StirlingTable table(2);
    benchmark::DoNotOptimize(table.row(d).size());
  }
}
BENCHMARK(BM_StirlingRow)->Arg(100)->Arg(300)->Arg(600)->Unit(benchmark::kMillisecond);

void BM_PcfSum(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  pcf::stirling_table(2).ensure(d);
  for (auto _ : state) benchmark::DoNotOptimize(pcf::pcf_sum_exact(d, pcf::Rational(600)));
}
BENCHMARK(BM_PcfSum)->Arg(50)->Arg(435)->Unit(benchmark::kMicrosecond);

void BM_Clm1(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pcf::verify_clm1(750, 600, 435, pcf::Clm1Range::full, 1).all_pass());
}
BENCHMARK(BM_Clm1)->Unit(benchmark::kMillisecond);

void BM_Greedy(benchmark::State& state) {
  const auto inst = with_neighborhoods(pcf::generate(pcf::gen::Gnp{static_cast<int>(state.range(0)), 0.05}, 1));
  for (auto _ : state) benchmark::DoNotOptimize(pcf::greedy_pcf(inst));
}
BENCHMARK(BM_Greedy)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_ExactChi(benchmark::State& state) {
  const auto inst = with_neighborhoods(pcf::generate(pcf::gen::Gnp{static_cast<int>(state.range(0)), 0.3}, 2));
  for (auto _ : state) benchmark::DoNotOptimize(pcf::exact_chi_pcf(inst).upper);
}
BENCHMARK(BM_ExactChi)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_Count(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = with_neighborhoods(pcf::generate(pcf::gen::Cycle{n}, 0));
  const auto lists = pcf::ListAssignment::uniform(n, 6);
  for (auto _ : state) benchmark::DoNotOptimize(pcf::count_pcf_colorings(inst, lists).count);
}
BENCHMARK(BM_Count)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_FractionalLp(benchmark::State& state) {
  const auto inst = with_neighborhoods(pcf::generate(pcf::gen::Gnp{static_cast<int>(state.range(0)), 0.4}, 3));
  for (auto _ : state) benchmark::DoNotOptimize(pcf::fractional_pcf_lp(inst).optimum);
}
BENCHMARK(BM_FractionalLp)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_GridMax(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pcf::grid_max_g(1e-3L, 8, 1).value);
}
BENCHMARK(BM_GridMax)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
