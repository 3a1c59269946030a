#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "gcsq/divisive.hpp"
#include "gcsq/error.hpp"
#include "gcsq/metrics.hpp"
#include "gcsq/synthgen.hpp"
#include "oracles.hpp"

namespace gcsq {
namespace {

using Sizes = std::vector<std::size_t>;

TEST(MakeSizes, Uniform) {
  EXPECT_EQ(make_sizes(60, 5, SizeProfile::kUniform), Sizes(5, 12));
  EXPECT_EQ(make_sizes(7, 3, SizeProfile::kUniform), (Sizes{3, 2, 2}));
}

TEST(MakeSizes, HighSkew) {
  EXPECT_EQ(make_sizes(60, 5, SizeProfile::kHighSkew), (Sizes{56, 1, 1, 1, 1}));
  EXPECT_EQ(make_sizes(3, 3, SizeProfile::kHighSkew), (Sizes{1, 1, 1}));
}

TEST(MakeSizes, Moderate) {
  EXPECT_EQ(make_sizes(60, 5, SizeProfile::kModerate), (Sizes{21, 15, 11, 8, 5}));
  EXPECT_EQ(make_sizes(60, 10, SizeProfile::kModerate), (Sizes{11, 9, 8, 7, 6, 5, 4, 4, 3, 3}));
  EXPECT_EQ(make_sizes(60, 20, SizeProfile::kModerate),
            (Sizes{5, 5, 5, 4, 4, 4, 4, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 1}));
  EXPECT_EQ(make_sizes(10, 1, SizeProfile::kModerate), (Sizes{10}));
  EXPECT_EQ(make_sizes(12, 3, SizeProfile::kModerate, 1.0), (Sizes{4, 4, 4}));
}

TEST(MakeSizes, Errors) {
  EXPECT_THROW(make_sizes(5, 6, SizeProfile::kUniform), Error);
  EXPECT_THROW(make_sizes(5, 0, SizeProfile::kUniform), Error);
  EXPECT_THROW(make_sizes(5, 2, SizeProfile::kExplicit), Error);
  EXPECT_THROW(make_sizes(5, 2, SizeProfile::kModerate, 0.5), Error);
  try {
    make_sizes(5, 6, SizeProfile::kHighSkew);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
  }
}

TEST(MakeSizesProperty, SumsDescendingPositive) {
  for (auto profile : {SizeProfile::kUniform, SizeProfile::kModerate, SizeProfile::kHighSkew}) {
    for (std::size_t n = 1; n <= 80; n += 3) {
      for (std::size_t k = 1; k <= n; k += 2) {
        const auto s = make_sizes(n, k, profile);
        ASSERT_EQ(s.size(), k);
        EXPECT_EQ(std::accumulate(s.begin(), s.end(), std::size_t{0}), n);
        EXPECT_TRUE(std::is_sorted(s.rbegin(), s.rend()));
        EXPECT_GE(s.back(), 1u);
      }
    }
  }
}

TEST(MakeSizesProperty, GiniOrderingAcrossProfiles) {
  for (std::size_t k : {5, 10, 20}) {
    const auto u = make_sizes(60, k, SizeProfile::kUniform);
    const auto m = make_sizes(60, k, SizeProfile::kModerate);
    const auto h = make_sizes(60, k, SizeProfile::kHighSkew);
    EXPECT_LT(gini(u), gini(m)) << k;
    EXPECT_LT(gini(m), gini(h)) << k;
  }
}

TEST(ProfileNames, RoundTrip) {
  for (auto p : {SizeProfile::kUniform, SizeProfile::kModerate, SizeProfile::kHighSkew,
                 SizeProfile::kExplicit}) {
    EXPECT_EQ(parse_profile(profile_name(p)), p);
  }
  EXPECT_EQ(profile_name(SizeProfile::kHighSkew), "high_skew");
  EXPECT_THROW(parse_profile("lumpy"), Error);
}

TEST(Generate, SignPatternAndRanges) {
  GenSpec spec;
  spec.n = 30;
  spec.k = 4;
  spec.profile = SizeProfile::kModerate;
  spec.seed = 5;
  const auto gen = generate(spec);
  EXPECT_EQ(gen.sizes, make_sizes(30, 4, SizeProfile::kModerate));
  EXPECT_EQ(gen.truth.cluster_sizes(), gen.sizes);
  for (std::size_t i = 0; i < 30; ++i) {
    EXPECT_EQ(gen.graph.weight(i, i), 0.0);
    for (std::size_t j = i + 1; j < 30; ++j) {
      const double w = gen.graph.weight(i, j);
      EXPECT_EQ(w, gen.graph.weight(j, i));
      if (gen.truth.label(i) == gen.truth.label(j)) {
        EXPECT_GE(w, 0.2);
        EXPECT_LE(w, 1.0);
      } else {
        EXPECT_GE(w, -1.0);
        EXPECT_LE(w, -0.2);
      }
    }
  }
}

TEST(Generate, ContiguousBlocks) {
  GenSpec spec;
  spec.n = 10;
  spec.k = 3;
  spec.profile = SizeProfile::kExplicit;
  spec.sizes = {2, 5, 3};
  EXPECT_EQ(generate(spec).truth, Partition({0, 0, 1, 1, 1, 1, 1, 2, 2, 2}));
}

TEST(Generate, DeterministicPerSeed) {
  GenSpec spec;
  spec.noise_flip_prob = 0.2;
  spec.edge_keep_prob = 0.7;
  spec.seed = 42;
  const auto a = generate(spec).graph.to_dense();
  EXPECT_EQ(a, generate(spec).graph.to_dense());
  spec.seed = 43;
  EXPECT_NE(a, generate(spec).graph.to_dense());
}

TEST(Generate, NoiseAndSparsityRates) {
  GenSpec spec;
  spec.n = 200;
  spec.k = 4;
  spec.noise_flip_prob = 0.2;
  spec.seed = 1;
  const auto noisy = generate(spec);
  std::size_t flipped = 0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < spec.n; ++i) {
    for (std::size_t j = i + 1; j < spec.n; ++j) {
      const bool same = noisy.truth.label(i) == noisy.truth.label(j);
      if ((noisy.graph.weight(i, j) > 0) != same) ++flipped;
      ++pairs;
    }
  }
  EXPECT_NEAR(static_cast<double>(flipped) / static_cast<double>(pairs), 0.2, 0.01);

  spec.noise_flip_prob = 0.0;
  spec.edge_keep_prob = 0.3;
  const auto sparse = generate(spec);
  std::size_t kept = 0;
  for (std::size_t i = 0; i < spec.n; ++i)
    for (std::size_t j = i + 1; j < spec.n; ++j) kept += sparse.graph.weight(i, j) != 0.0;
  EXPECT_NEAR(static_cast<double>(kept) / static_cast<double>(pairs), 0.3, 0.01);
}

TEST(Generate, Validation) {
  GenSpec spec;
  spec.n = 5;
  spec.k = 6;
  try {
    generate(spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
  }
  spec = {};
  spec.intra_lo = -0.1;
  EXPECT_THROW(generate(spec), Error);
  spec = {};
  spec.inter_hi = 0.1;
  EXPECT_THROW(generate(spec), Error);
  spec = {};
  spec.noise_flip_prob = 0.5;
  EXPECT_THROW(generate(spec), Error);
  spec = {};
  spec.edge_keep_prob = 0.0;
  EXPECT_THROW(generate(spec), Error);
  spec = {};
  spec.profile = SizeProfile::kExplicit;
  spec.k = 2;
  spec.sizes = {30, 29};
  EXPECT_THROW(generate(spec), Error);
}

TEST(Generate, TruthIsUniqueMaximizerOnSmallNoiselessGraphs) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    GenSpec spec;
    spec.n = 6;
    spec.k = 2 + seed % 2;
    spec.seed = seed;
    const auto gen = generate(spec);
    const auto best = testing::brute_max_agreement(gen.graph.to_dense());
    EXPECT_EQ(best.maximizers, 1u);
    EXPECT_EQ(Partition(best.labels), gen.truth);
    EXPECT_EQ(cluster(gen.graph).partition, gen.truth);
  }
}

}  // namespace
}  // namespace gcsq
