#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "gcsq/signed_graph.hpp"

namespace gcsq {

enum class NmiNormalization { kSqrt, kMin, kMax, kArithmetic };

/// Normalized mutual information (natural log). Two single-cluster
/// partitions score 1; exactly one single-cluster partition scores 0.
double nmi(const Partition& a, const Partition& b,
           NmiNormalization norm = NmiNormalization::kSqrt);

/// Newman modularity extended to signed weights: positive and negative
/// parts are scored separately and combined as
/// (W+ Q+ - W- Q-) / (W+ + W-). Throws on an all-zero graph.
double modularity(const SignedGraph& g, const Partition& p);

/// sum_i sum_j |s_i - s_j| / (2 n^2 mean).
double gini(std::span<const std::size_t> sizes);

/// Largest size over smallest size.
double size_ratio(std::span<const std::size_t> sizes);

struct MetricReport {
  std::optional<double> nmi;
  double modularity = 0.0;
  double gini = 0.0;
  double size_ratio = 1.0;
  double agreement = 0.0;
  std::size_t k = 0;
};

MetricReport report(const SignedGraph& g, const Partition& p,
                    const Partition* truth = nullptr);

}  // namespace gcsq
