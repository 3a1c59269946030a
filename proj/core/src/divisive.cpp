#include "gcsq/divisive.hpp"

#include <deque>
#include <numeric>
#include <string>

#include "gcsq/error.hpp"
#include "gcsq/rng.hpp"

namespace gcsq {
namespace {

void check_config(const ClusterConfig& cfg) {
  if (!(cfg.epsilon >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "epsilon must be >= 0");
  if (cfg.min_split_size < 2) {
    throw Error(ErrorCode::kInvalidArgument, "min_split_size must be >= 2");
  }
}

SplitOutcome split_with(const SignedGraph& g, const ClusterConfig& cfg,
                        const SolverOptions& solver) {
  const QuboProblem qubo = build_bipartition_qubo(g);
  SolverResult solved = solve(qubo, solver);
  SplitOutcome out;
  out.mask = std::move(solved.assignment);
  out.cut = cut_weight(g, out.mask);
  std::size_t side_a = 0;
  for (auto bit : out.mask) side_a += bit;
  const bool both_sides = side_a > 0 && side_a < out.mask.size();
  out.accepted = both_sides && out.cut < -cfg.epsilon;
  return out;
}

}  // namespace

SplitOutcome split_once(const SignedGraph& g, const ClusterConfig& cfg) {
  check_config(cfg);
  if (g.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "split_once needs at least two nodes");
  }
  return split_with(g, cfg, cfg.solver);
}

ClusterResult cluster(const SignedGraph& g, const ClusterConfig& cfg) {
  check_config(cfg);
  ClusterResult result;
  std::vector<std::size_t> labels(g.size(), 0);
  std::size_t next_label = 0;

  std::deque<std::vector<NodeIndex>> queue;
  queue.emplace_back(g.size());
  std::iota(queue.back().begin(), queue.back().end(), NodeIndex{0});

  while (!queue.empty()) {
    std::vector<NodeIndex> nodes = std::move(queue.front());
    queue.pop_front();

    if (nodes.size() < cfg.min_split_size) {
      for (NodeIndex v : nodes) labels[v] = next_label;
      ++next_label;
      continue;
    }

    SolverOptions solver = cfg.solver;
    solver.sa.seed = mix_seed(cfg.solver.sa.seed, result.solves);
    const SignedGraph sub = subgraph(g, nodes);
    SplitOutcome split = split_with(sub, cfg, solver);
    ++result.solves;

    if (cfg.record_trace) {
      SplitRecord rec;
      rec.nodes = nodes;
      rec.mask = split.mask;
      rec.cut = split.cut;
      rec.accepted = split.accepted;
      result.trace.push_back(std::move(rec));
    }

    if (!split.accepted) {
      for (NodeIndex v : nodes) labels[v] = next_label;
      ++next_label;
      continue;
    }
    ++result.accepted_splits;
    std::vector<NodeIndex> side_a;
    std::vector<NodeIndex> side_b;
    for (std::size_t local = 0; local < nodes.size(); ++local) {
      (split.mask[local] ? side_a : side_b).push_back(nodes[local]);
    }
    queue.push_back(std::move(side_a));
    queue.push_back(std::move(side_b));
  }

  result.partition = Partition(std::move(labels));
  return result;
}

}  // namespace gcsq
