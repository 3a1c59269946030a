#pragma once

#include <cstddef>
#include <vector>

#include "gcsq/qubo.hpp"
#include "gcsq/signed_graph.hpp"

namespace gcsq {

struct ClusterConfig {
  SolverOptions solver;
  /// Queue entries smaller than this are finalized without a solve.
  std::size_t min_split_size = 2;
  /// A split is accepted only when its cut is below -epsilon.
  double epsilon = 1e-9;
  bool record_trace = false;
};

struct SplitRecord {
  std::vector<NodeIndex> nodes;  // indices into the clustered graph
  Bipartition mask;              // aligned with `nodes`
  double cut = 0.0;
  bool accepted = false;
};

struct SplitOutcome {
  Bipartition mask;
  double cut = 0.0;
  bool accepted = false;
};

struct ClusterResult {
  Partition partition;
  std::vector<SplitRecord> trace;  // empty unless record_trace
  std::size_t solves = 0;
  std::size_t accepted_splits = 0;
};

/// One QUBO bipartition of `g`. Accepted iff cut < -epsilon and both sides
/// are non-empty. Requires g.size() >= 2.
SplitOutcome split_once(const SignedGraph& g, const ClusterConfig& cfg);

/// Divisive correlation clustering: a FIFO queue starts with all nodes;
/// each popped set is bipartitioned by solving its max-agreement QUBO and
/// either re-queued as two halves (accepted split) or emitted as a final
/// cluster. Every accepted split raises intra-cluster agreement by -cut.
///
/// With the sa backend, solve number s uses seed mix_seed(cfg.solver.sa.seed, s),
/// so results are reproducible for a fixed configuration.
ClusterResult cluster(const SignedGraph& g, const ClusterConfig& cfg = {});

}  // namespace gcsq
