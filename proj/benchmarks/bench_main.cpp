#include <benchmark/benchmark.h>

#include <random>

#include "gcsq/divisive.hpp"
#include "gcsq/ingest.hpp"
#include "gcsq/qubo.hpp"
#include "gcsq/synthgen.hpp"

namespace {

using namespace gcsq;

SignedGraph planted(std::size_t n, std::size_t k) {
  GenSpec spec;
  spec.n = n;
  spec.k = k;
  spec.noise_flip_prob = 0.05;
  spec.seed = 17;
  return generate(spec).graph;
}

void BM_SolveExact(benchmark::State& state) {
  const auto q = build_bipartition_qubo(planted(static_cast<std::size_t>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact(q).objective);
}
BENCHMARK(BM_SolveExact)->DenseRange(12, 22, 2)->Unit(benchmark::kMillisecond);

void BM_SolveSa(benchmark::State& state) {
  const auto q = build_bipartition_qubo(planted(static_cast<std::size_t>(state.range(0)), 5));
  SaConfig cfg;
  cfg.restarts = 1;
  for (auto _ : state) benchmark::DoNotOptimize(solve_sa(q, cfg).objective);
}
BENCHMARK(BM_SolveSa)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond);

void BM_ClusterSa(benchmark::State& state) {
  const auto g = planted(static_cast<std::size_t>(state.range(0)), 5);
  ClusterConfig cfg;
  cfg.solver.backend = "sa";
  for (auto _ : state) benchmark::DoNotOptimize(cluster(g, cfg).partition.num_clusters());
}
BENCHMARK(BM_ClusterSa)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_Pearson(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  FeatureMatrix x{DenseMatrix(m, 200), {}};
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < 200; ++c) x.values(r, c) = normal(rng);
  for (auto _ : state) benchmark::DoNotOptimize(pearson_matrix(x).graph.size());
}
BENCHMARK(BM_Pearson)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
