#include <benchmark/benchmark.h>

#include <cstddef>

#include "cimprove/centrality.hpp"
#include "cimprove/cluster.hpp"
#include "cimprove/instance.hpp"
#include "cimprove/random_graphs.hpp"
#include "cimprove/solve_exact.hpp"
#include "cimprove/solve_fpt.hpp"

namespace {

using namespace cimprove;

constexpr std::uint64_t kSeed = 20240601;

Graph sparse(std::size_t n, bool directed) {
  return erdos_renyi(n, 3.0 / static_cast<double>(n), directed, kSeed);
}

PlantedGraph planted(std::size_t clusters, std::size_t extra) {
  PlantedParams params;
  params.clusters = clusters;
  params.min_size = 2;
  params.max_size = 5;
  params.extra = extra;
  return planted_cluster_graph(params, kSeed);
}

void BM_Closeness(benchmark::State& state) {
  const Graph g = sparse(static_cast<std::size_t>(state.range(0)), false);
  for (auto _ : state) benchmark::DoNotOptimize(closeness(g, 0));
}
BENCHMARK(BM_Closeness)->RangeMultiplier(4)->Range(64, 4096);

void BM_Betweenness(benchmark::State& state) {
  const Graph g = sparse(static_cast<std::size_t>(state.range(0)), false);
  for (auto _ : state) benchmark::DoNotOptimize(betweenness(g, 0));
}
BENCHMARK(BM_Betweenness)->RangeMultiplier(4)->Range(64, 1024);

// range(0) = n, range(1) = k
void BM_Incident(benchmark::State& state) {
  const auto kind = state.range(2) != 0 ? CentralityKind::kBetweenness
                                        : CentralityKind::kCloseness;
  const ImprovementInstance inst(
      sparse(static_cast<std::size_t>(state.range(0)), false), 0,
      static_cast<std::size_t>(state.range(1)), Rational(0), kind);
  for (auto _ : state) benchmark::DoNotOptimize(solve_incident(inst));
}
BENCHMARK(BM_Incident)
    ->Args({16, 1, 0})
    ->Args({16, 2, 0})
    ->Args({16, 3, 0})
    ->Args({16, 2, 1})
    ->Unit(benchmark::kMillisecond);

void BM_Greedy(benchmark::State& state) {
  const ImprovementInstance inst(
      sparse(static_cast<std::size_t>(state.range(0)), false), 0, 4,
      Rational(0), CentralityKind::kCloseness);
  for (auto _ : state) benchmark::DoNotOptimize(greedy(inst));
}
BENCHMARK(BM_Greedy)->Arg(32)->Arg(128)->Arg(512)->Unit(
    benchmark::kMillisecond);

void BM_ClusterVertexDeletion(benchmark::State& state) {
  const PlantedGraph p = planted(static_cast<std::size_t>(state.range(0)),
                                 static_cast<std::size_t>(state.range(1)));
  for (auto _ : state)
    benchmark::DoNotOptimize(cluster_vertex_deletion(p.g, p.z));
}
BENCHMARK(BM_ClusterVertexDeletion)
    ->Args({4, 1})
    ->Args({6, 2})
    ->Args({8, 3})
    ->Unit(benchmark::kMillisecond);

void BM_ClosenessFpt(benchmark::State& state) {
  const PlantedGraph p = planted(5, 2);
  const ImprovementInstance inst(p.g, p.z,
                                 static_cast<std::size_t>(state.range(0)),
                                 Rational(0), CentralityKind::kCloseness);
  const auto dec = decompose(p.g, p.z, p.extras);
  for (auto _ : state) benchmark::DoNotOptimize(solve_closeness_fpt(inst, dec));
}
BENCHMARK(BM_ClosenessFpt)->Arg(1)->Arg(2)->Arg(3)->Unit(
    benchmark::kMillisecond);

void BM_BetweennessFpt(benchmark::State& state) {
  const PlantedGraph p = planted(4, 1);
  const ImprovementInstance inst(p.g, p.z,
                                 static_cast<std::size_t>(state.range(0)),
                                 Rational(0), CentralityKind::kBetweenness);
  const auto dec = decompose(p.g, p.z, p.extras);
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_betweenness_fpt(inst, dec));
}
BENCHMARK(BM_BetweennessFpt)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
