#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "gcsq/divisive.hpp"
#include "gcsq/error.hpp"
#include "gcsq/metrics.hpp"
#include "gcsq/synthgen.hpp"
#include "oracles.hpp"

namespace gcsq {
namespace {

using testing::triangle;

ClusterConfig sa_config(std::uint64_t seed) {
  ClusterConfig cfg;
  cfg.solver.backend = "sa";
  cfg.solver.sa.seed = seed;
  return cfg;
}

TEST(Cluster, Triangle) {
  const auto r = cluster(triangle());
  EXPECT_EQ(r.partition, Partition({0, 0, 1}));
  EXPECT_EQ(r.accepted_splits, 1u);
  EXPECT_EQ(intra_agreement(triangle(), r.partition), 1.0);
}

TEST(Cluster, AllPositiveStaysWhole) {
  DenseMatrix w(5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (i != j) w(i, j) = 0.3;
  const auto r = cluster(SignedGraph::from_dense(w));
  EXPECT_EQ(r.partition.num_clusters(), 1u);
  EXPECT_EQ(r.solves, 1u);
  EXPECT_EQ(r.accepted_splits, 0u);
}

TEST(Cluster, AllNegativeGivesSingletons) {
  DenseMatrix w(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      if (i != j) w(i, j) = -0.5;
  const auto r = cluster(SignedGraph::from_dense(w));
  EXPECT_EQ(r.partition.num_clusters(), 6u);
  EXPECT_EQ(r.accepted_splits, 5u);
}

TEST(Cluster, TwoBlocks) {
  const auto g = SignedGraph::from_dense(testing::two_block_weights());
  const auto r = cluster(g);
  EXPECT_EQ(r.partition, Partition({0, 0, 0, 1, 1, 1}));
  EXPECT_EQ(r.accepted_splits, 1u);
  EXPECT_EQ(r.solves, 3u);
}

TEST(Cluster, TinyInputs) {
  EXPECT_EQ(cluster(SignedGraph::from_dense(DenseMatrix(1, 1))).partition.num_clusters(), 1u);
  EXPECT_EQ(cluster(SignedGraph::from_dense(DenseMatrix(1, 1))).solves, 0u);
  EXPECT_EQ(cluster(SignedGraph::from_dense({{0, -1}, {-1, 0}})).partition.num_clusters(), 2u);
  EXPECT_EQ(cluster(SignedGraph::from_dense({{0, 1}, {1, 0}})).partition.num_clusters(), 1u);
  EXPECT_EQ(cluster(SignedGraph::from_dense(DenseMatrix(4, 4))).partition.num_clusters(), 1u);
}

TEST(Cluster, MinSplitSizeFinalizesSmallSets) {
  ClusterConfig cfg;
  cfg.min_split_size = 4;
  const auto r = cluster(triangle(), cfg);
  EXPECT_EQ(r.partition.num_clusters(), 1u);
  EXPECT_EQ(r.solves, 0u);
}

TEST(SplitOnce, Cases) {
  const auto tri = split_once(triangle(), {});
  EXPECT_TRUE(tri.accepted);
  EXPECT_EQ(tri.cut, -2.0);
  EXPECT_EQ(tri.mask, (Bipartition{0, 0, 1}));

  const auto zero = split_once(SignedGraph::from_dense(DenseMatrix(3, 3)), {});
  EXPECT_FALSE(zero.accepted);
  EXPECT_EQ(zero.cut, 0.0);

  EXPECT_THROW(split_once(SignedGraph::from_dense(DenseMatrix(1, 1)), {}), Error);
}

TEST(SplitOnce, EpsilonRejectsTinyGains) {
  ClusterConfig cfg;
  cfg.epsilon = 1e-3;
  EXPECT_FALSE(split_once(SignedGraph::from_dense({{0, -1e-4}, {-1e-4, 0}}), cfg).accepted);
  cfg.epsilon = 1e-9;
  EXPECT_TRUE(split_once(SignedGraph::from_dense({{0, -1e-4}, {-1e-4, 0}}), cfg).accepted);
}

TEST(ClusterProperty, TraceIsMonotoneAndBounded) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 14;
    const auto g = SignedGraph::from_dense(testing::random_weights(n, rng, true));
    ClusterConfig cfg;
    cfg.record_trace = true;
    const auto r = cluster(g, cfg);
    const std::size_t k = r.partition.num_clusters();
    EXPECT_LE(r.accepted_splits, n - 1);
    EXPECT_EQ(r.accepted_splits, k - 1);
    EXPECT_EQ(r.solves, r.trace.size());
    EXPECT_LE(r.solves, 2 * k - 1);

    // Replay the accepted splits: agreement rises by exactly -cut each time.
    double agreement = intra_agreement(g, Partition::single_cluster(n));
    std::vector<std::size_t> labels(n, 0);
    std::size_t next = 1;
    for (const auto& rec : r.trace) {
      if (!rec.accepted) {
        EXPECT_GE(rec.cut, -cfg.epsilon);
        continue;
      }
      EXPECT_LT(rec.cut, -cfg.epsilon);
      for (std::size_t t = 0; t < rec.nodes.size(); ++t) {
        if (rec.mask[t]) labels[rec.nodes[t]] = next;
      }
      ++next;
      const double after = intra_agreement(g, Partition(labels));
      EXPECT_EQ(after, agreement - rec.cut);
      EXPECT_GT(after, agreement);
      agreement = after;
    }
    EXPECT_EQ(Partition(labels), r.partition);
  }
}

TEST(ClusterProperty, RecoversNoiselessTwoClusterGraphs) {
  // With two clusters the truth bipartition is the unique minimum cut, and
  // both halves are all-positive, so no further split is accepted.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 19;
    const std::size_t k = 1 + rng() % 2;
    std::vector<std::size_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = i < k ? i : rng() % k;
    const auto g = SignedGraph::from_dense(testing::balanced_weights(labels, rng));
    EXPECT_EQ(cluster(g).partition, Partition(labels)) << "n=" << n << " k=" << k;
  }
}

TEST(ClusterProperty, FirstSplitCanBreakAWeakCluster) {
  // Noiseless balanced graph whose minimum cut separates nodes 0 and 1,
  // which share a weak positive edge. Divisive splitting never merges, so
  // the result has lower agreement than the planted partition.
  GenSpec spec;
  spec.n = 6;
  spec.k = 4;
  spec.profile = SizeProfile::kModerate;
  spec.seed = 5031;
  const auto gen = generate(spec);
  ASSERT_EQ(gen.truth, Partition({0, 0, 1, 1, 2, 3}));
  const auto best = testing::brute_max_agreement(gen.graph.to_dense());
  EXPECT_EQ(Partition(best.labels), gen.truth);

  const auto first = split_once(gen.graph, {});
  EXPECT_NE(first.mask[0], first.mask[1]);
  const auto r = cluster(gen.graph);
  EXPECT_NE(r.partition, gen.truth);
  EXPECT_LT(intra_agreement(gen.graph, r.partition), best.agreement - 0.1);
}

TEST(ClusterProperty, SaBackendIsSeedDeterministic) {
  GenSpec spec;
  spec.n = 40;
  spec.k = 4;
  spec.noise_flip_prob = 0.1;
  spec.seed = 3;
  const auto g = generate(spec).graph;
  const auto a = cluster(g, sa_config(11));
  const auto b = cluster(g, sa_config(11));
  EXPECT_EQ(a.partition, b.partition);
  EXPECT_EQ(a.solves, b.solves);
}

TEST(ClusterProperty, ExactOptimumOnSmallGraphsMatchesEnumeration) {
  // The first split is optimal among all bipartitions.
  std::mt19937_64 rng(66);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    const auto w = testing::random_weights(n, rng);
    const auto g = SignedGraph::from_dense(w);
    double best = 0.0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      Bipartition x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = (bits >> i) & 1U;
      best = std::min(best, cut_weight(g, x));
    }
    EXPECT_NEAR(split_once(g, {}).cut, best, 1e-12);
  }
}

}  // namespace
}  // namespace gcsq
