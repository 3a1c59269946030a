#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gcsq/dense_matrix.hpp"
#include "gcsq/signed_graph.hpp"

namespace gcsq {

/// Samples in rows, features in columns.
struct FeatureMatrix {
  DenseMatrix values;
  std::vector<std::string> names;  // empty or one per column
};

FeatureMatrix load_feature_csv(const std::filesystem::path& path, bool has_header);

/// Keeps each row with probability `fraction` (at least two rows survive).
FeatureMatrix sample_rows(const FeatureMatrix& x, double fraction, std::uint64_t seed);

struct PearsonOptions {
  bool drop_constant = false;
};

struct CorrelationGraph {
  SignedGraph graph;
  std::vector<std::size_t> kept_features;  // column indices behind each node
  std::vector<std::size_t> dropped_features;
};

/// Two-pass Pearson correlation between feature columns, clamped to
/// [-1, 1]. Constant columns throw unless `drop_constant` is set.
CorrelationGraph pearson_matrix(const FeatureMatrix& x, const PearsonOptions& opts = {});

/// Reads a precomputed square correlation matrix. Entries outside
/// [-1 - 1e-6, 1 + 1e-6] are rejected; the rest are clamped, symmetrized
/// and the diagonal is zeroed.
SignedGraph load_correlation_csv(const std::filesystem::path& path, bool has_header = false);
SignedGraph correlation_graph_from_matrix(const DenseMatrix& m);

}  // namespace gcsq
