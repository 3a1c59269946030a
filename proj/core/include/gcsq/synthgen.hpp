#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gcsq/signed_graph.hpp"

namespace gcsq {

enum class SizeProfile { kUniform, kModerate, kHighSkew, kExplicit };

std::string_view profile_name(SizeProfile p);
SizeProfile parse_profile(std::string_view name);

/// Max/min size ratio targeted by the moderate profile.
inline constexpr double kModerateTargetRatio = 3.95;

/// Cluster sizes, largest first. uniform: sizes differ by at most one.
/// high_skew: one cluster of n-k+1 plus k-1 singletons. moderate: a
/// geometric progression whose end-to-end ratio is `moderate_ratio`,
/// rounded by largest remainder to sum to n (every size >= 1).
std::vector<std::size_t> make_sizes(std::size_t n, std::size_t k, SizeProfile profile,
                                    double moderate_ratio = kModerateTargetRatio);

struct GenSpec {
  std::size_t n = 60;
  std::size_t k = 5;
  SizeProfile profile = SizeProfile::kUniform;
  std::vector<std::size_t> sizes;  // only for kExplicit
  double moderate_ratio = kModerateTargetRatio;
  double intra_lo = 0.2;
  double intra_hi = 1.0;
  double inter_lo = -1.0;
  double inter_hi = -0.2;
  double noise_flip_prob = 0.0;
  double edge_keep_prob = 1.0;  // < 1 gives a sparse graph
  std::uint64_t seed = 0;
};

/// Throws kInvalidArgument / kInfeasible describing the first violated rule.
void validate(const GenSpec& spec);

struct GeneratedGraph {
  SignedGraph graph;
  Partition truth;
  std::vector<std::size_t> sizes;
};

/// Nodes are laid out in contiguous blocks in `make_sizes` order. Intra
/// weights ~ U[intra_lo, intra_hi], inter weights ~ U[inter_lo, inter_hi];
/// each kept edge flips sign with probability noise_flip_prob.
GeneratedGraph generate(const GenSpec& spec);

}  // namespace gcsq
