#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gcsq/dense_matrix.hpp"

namespace gcsq {

using NodeIndex = std::size_t;

struct WeightedEdge {
  NodeIndex u = 0;
  NodeIndex v = 0;
  double weight = 0.0;
};

/// Symmetric signed graph with dense weight storage.
///
/// Invariants: weights are symmetric and finite, the diagonal is zero and
/// `node_ids()` holds n distinct identifiers. For graphs produced by
/// `subgraph`, the identifiers are the parent's identifiers, so a chain of
/// subgraphs always maps back to the root graph.
class SignedGraph {
 public:
  /// Symmetrizes by averaging, zeroes the diagonal. Throws on a non-square,
  /// empty or non-finite matrix.
  static SignedGraph from_dense(const DenseMatrix& weights);

  /// Builds an n-node graph from an edge list. Repeated edges accumulate;
  /// self-loops are dropped.
  static SignedGraph from_edges(std::size_t n, std::span<const WeightedEdge> edges);

  std::size_t size() const noexcept { return n_; }

  double weight(NodeIndex i, NodeIndex j) const { return weights_[i * n_ + j]; }
  std::span<const double> row(NodeIndex i) const { return {weights_.data() + i * n_, n_}; }

  std::span<const NodeIndex> node_ids() const noexcept { return node_ids_; }

  /// Copy of the weights as a matrix (diagonal zero).
  DenseMatrix to_dense() const;

  /// Sum of w_ij over unordered pairs i < j.
  double total_weight() const;

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  SignedGraph(std::size_t n, std::vector<double> weights, std::vector<NodeIndex> ids)
      : n_(n), weights_(std::move(weights)), node_ids_(std::move(ids)) {}

  friend SignedGraph subgraph(const SignedGraph& g, std::span<const NodeIndex> nodes);

  std::size_t n_ = 0;
  std::vector<double> weights_;
  std::vector<NodeIndex> node_ids_;
};

/// Cluster assignment with labels canonicalized to 0..k-1 in order of
/// first appearance.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::size_t> raw_labels);

  static Partition single_cluster(std::size_t n);
  static Partition singletons(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t num_clusters() const noexcept { return k_; }
  std::span<const std::size_t> labels() const noexcept { return labels_; }
  std::size_t label(NodeIndex i) const { return labels_[i]; }

  /// Cluster sizes indexed by label.
  std::vector<std::size_t> cluster_sizes() const;
  /// Member lists indexed by label, each sorted ascending.
  std::vector<std::vector<NodeIndex>> clusters() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> labels_;
  std::size_t k_ = 0;
};

/// Two-sided split of a node set; side A is mask = 1.
using Bipartition = std::vector<std::uint8_t>;

/// Induced subgraph on `nodes` (order preserved). Throws on an empty set or
/// an out-of-range index.
SignedGraph subgraph(const SignedGraph& g, std::span<const NodeIndex> nodes);

/// Sum of w_ij with i on side A and j on side B; zero if either side is empty.
double cut_weight(const SignedGraph& g, const Bipartition& mask);

/// Sum of w_ij over unordered same-cluster pairs.
double intra_agreement(const SignedGraph& g, const Partition& p);

}  // namespace gcsq
