#include "gcsq/signed_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gcsq/error.hpp"

namespace gcsq {

SignedGraph SignedGraph::from_dense(const DenseMatrix& m) {
  if (m.rows() == 0) throw Error(ErrorCode::kInvalidArgument, "graph must have at least one node");
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kShapeMismatch, "weight matrix is " + std::to_string(m.rows()) + "x" +
                                               std::to_string(m.cols()) + ", expected square");
  }
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(m(i, j))) {
        throw Error(ErrorCode::kNonFinite, "non-finite weight at (" + std::to_string(i) + ", " +
                                               std::to_string(j) + ")");
      }
    }
  }
  std::vector<double> w(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = m(i, j) == m(j, i) ? m(i, j) : 0.5 * (m(i, j) + m(j, i));
      w[i * n + j] = v;
      w[j * n + i] = v;
    }
  }
  std::vector<NodeIndex> ids(n);
  std::iota(ids.begin(), ids.end(), NodeIndex{0});
  return SignedGraph(n, std::move(w), std::move(ids));
}

SignedGraph SignedGraph::from_edges(std::size_t n, std::span<const WeightedEdge> edges) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "graph must have at least one node");
  DenseMatrix m(n, n);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::kOutOfRange, "edge (" + std::to_string(e.u) + ", " +
                                              std::to_string(e.v) + ") outside a " +
                                              std::to_string(n) + "-node graph");
    }
    if (e.u == e.v) continue;
    m(e.u, e.v) += e.weight;
    m(e.v, e.u) += e.weight;
  }
  return from_dense(m);
}

DenseMatrix SignedGraph::to_dense() const {
  DenseMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = weight(i, j);
  }
  return m;
}

double SignedGraph::total_weight() const {
  double total = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) total += weight(i, j);
  }
  return total;
}

SignedGraph subgraph(const SignedGraph& g, std::span<const NodeIndex> nodes) {
  if (nodes.empty()) throw Error(ErrorCode::kInvalidArgument, "subgraph node set is empty");
  const std::size_t m = nodes.size();
  std::vector<bool> seen(g.size(), false);
  for (NodeIndex v : nodes) {
    if (v >= g.size()) {
      throw Error(ErrorCode::kOutOfRange, "subgraph index " + std::to_string(v) +
                                              " outside a " + std::to_string(g.size()) +
                                              "-node graph");
    }
    if (seen[v]) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate subgraph index " + std::to_string(v));
    }
    seen[v] = true;
  }
  std::vector<double> w(m * m, 0.0);
  std::vector<NodeIndex> ids(m);
  for (std::size_t a = 0; a < m; ++a) {
    ids[a] = g.node_ids()[nodes[a]];
    for (std::size_t b = 0; b < m; ++b) w[a * m + b] = g.weight(nodes[a], nodes[b]);
  }
  return SignedGraph(m, std::move(w), std::move(ids));
}

double cut_weight(const SignedGraph& g, const Bipartition& mask) {
  if (mask.size() != g.size()) {
    throw Error(ErrorCode::kShapeMismatch, "bipartition has " + std::to_string(mask.size()) +
                                               " entries for a " + std::to_string(g.size()) +
                                               "-node graph");
  }
  double cut = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!mask[i]) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (!mask[j]) cut += g.weight(i, j);
    }
  }
  return cut;
}

double intra_agreement(const SignedGraph& g, const Partition& p) {
  if (p.size() != g.size()) {
    throw Error(ErrorCode::kShapeMismatch, "partition has " + std::to_string(p.size()) +
                                               " labels for a " + std::to_string(g.size()) +
                                               "-node graph");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (p.label(i) == p.label(j)) total += g.weight(i, j);
    }
  }
  return total;
}

Partition::Partition(std::vector<std::size_t> raw_labels) : labels_(std::move(raw_labels)) {
  std::vector<std::pair<std::size_t, std::size_t>> remap;  // raw -> canonical
  for (auto& label : labels_) {
    auto it = std::find_if(remap.begin(), remap.end(),
                           [&](const auto& entry) { return entry.first == label; });
    if (it == remap.end()) {
      remap.emplace_back(label, remap.size());
      label = remap.size() - 1;
    } else {
      label = it->second;
    }
  }
  k_ = remap.size();
}

Partition Partition::single_cluster(std::size_t n) {
  return Partition(std::vector<std::size_t>(n, 0));
}

Partition Partition::singletons(std::size_t n) {
  std::vector<std::size_t> labels(n);
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  return Partition(std::move(labels));
}

std::vector<std::size_t> Partition::cluster_sizes() const {
  std::vector<std::size_t> sizes(k_, 0);
  for (auto label : labels_) ++sizes[label];
  return sizes;
}

std::vector<std::vector<NodeIndex>> Partition::clusters() const {
  std::vector<std::vector<NodeIndex>> out(k_);
  for (std::size_t i = 0; i < labels_.size(); ++i) out[labels_[i]].push_back(i);
  return out;
}

}  // namespace gcsq
