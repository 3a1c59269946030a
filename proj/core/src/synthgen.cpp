#include "gcsq/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gcsq/error.hpp"
#include "gcsq/rng.hpp"

namespace gcsq {

std::string_view profile_name(SizeProfile p) {
  switch (p) {
    case SizeProfile::kUniform: return "uniform";
    case SizeProfile::kModerate: return "moderate";
    case SizeProfile::kHighSkew: return "high_skew";
    case SizeProfile::kExplicit: return "explicit";
  }
  return "unknown";
}

SizeProfile parse_profile(std::string_view name) {
  if (name == "uniform") return SizeProfile::kUniform;
  if (name == "moderate") return SizeProfile::kModerate;
  if (name == "high_skew") return SizeProfile::kHighSkew;
  if (name == "explicit") return SizeProfile::kExplicit;
  throw Error(ErrorCode::kInvalidArgument, "unknown size profile '" + std::string(name) + "'");
}

std::vector<std::size_t> make_sizes(std::size_t n, std::size_t k, SizeProfile profile,
                                    double moderate_ratio) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "cluster count must be positive");
  if (n < k) {
    throw Error(ErrorCode::kInfeasible, "cannot place " + std::to_string(k) +
                                            " non-empty clusters on " + std::to_string(n) +
                                            " nodes");
  }
  std::vector<std::size_t> sizes(k, 1);
  switch (profile) {
    case SizeProfile::kUniform:
      for (std::size_t c = 0; c < k; ++c) sizes[c] = n / k + (c < n % k ? 1 : 0);
      return sizes;
    case SizeProfile::kHighSkew:
      sizes[0] = n - (k - 1);
      return sizes;
    case SizeProfile::kModerate:
      break;
    case SizeProfile::kExplicit:
      throw Error(ErrorCode::kInvalidArgument, "explicit profile takes sizes, not make_sizes");
  }

  if (!(moderate_ratio >= 1.0) || !std::isfinite(moderate_ratio)) {
    throw Error(ErrorCode::kInvalidArgument, "moderate ratio must be >= 1");
  }
  if (k == 1) return {n};
  const double step = std::pow(moderate_ratio, 1.0 / static_cast<double>(k - 1));
  std::vector<double> ideal(k);
  for (std::size_t c = 0; c < k; ++c) {
    ideal[c] = std::pow(step, static_cast<double>(k - 1 - c));
  }
  const double scale = static_cast<double>(n) / std::accumulate(ideal.begin(), ideal.end(), 0.0);
  std::size_t total = 0;
  for (std::size_t c = 0; c < k; ++c) {
    ideal[c] *= scale;
    sizes[c] = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(ideal[c])));
    total += sizes[c];
  }
  // Largest remainder, respecting the floor of one node per cluster.
  while (total < n) {
    std::size_t pick = 0;
    for (std::size_t c = 1; c < k; ++c) {
      if (ideal[c] - static_cast<double>(sizes[c]) > ideal[pick] - static_cast<double>(sizes[pick])) {
        pick = c;
      }
    }
    ++sizes[pick];
    ++total;
  }
  while (total > n) {
    std::size_t pick = k;
    for (std::size_t c = 0; c < k; ++c) {
      if (sizes[c] < 2) continue;
      if (pick == k || static_cast<double>(sizes[c]) - ideal[c] >
                           static_cast<double>(sizes[pick]) - ideal[pick]) {
        pick = c;
      }
    }
    --sizes[pick];
    --total;
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

void validate(const GenSpec& spec) {
  auto fail = [](ErrorCode code, const std::string& msg) { throw Error(code, "GenSpec: " + msg); };
  if (spec.n == 0) fail(ErrorCode::kInvalidArgument, "n must be positive");
  if (spec.k == 0) fail(ErrorCode::kInvalidArgument, "k must be positive");
  if (spec.k > spec.n) {
    fail(ErrorCode::kInfeasible, "k=" + std::to_string(spec.k) + " exceeds n=" + std::to_string(spec.n));
  }
  if (!(spec.intra_lo > 0.0 && spec.intra_lo <= spec.intra_hi && spec.intra_hi <= 1.0)) {
    fail(ErrorCode::kInvalidArgument, "intra range must satisfy 0 < lo <= hi <= 1");
  }
  if (!(spec.inter_lo >= -1.0 && spec.inter_lo <= spec.inter_hi && spec.inter_hi < 0.0)) {
    fail(ErrorCode::kInvalidArgument, "inter range must satisfy -1 <= lo <= hi < 0");
  }
  if (!(spec.noise_flip_prob >= 0.0 && spec.noise_flip_prob < 0.5)) {
    fail(ErrorCode::kInvalidArgument, "noise_flip_prob must lie in [0, 0.5)");
  }
  if (!(spec.edge_keep_prob > 0.0 && spec.edge_keep_prob <= 1.0)) {
    fail(ErrorCode::kInvalidArgument, "edge_keep_prob must lie in (0, 1]");
  }
  if (spec.profile == SizeProfile::kExplicit) {
    if (spec.sizes.size() != spec.k) fail(ErrorCode::kInvalidArgument, "explicit sizes must list k entries");
    std::size_t sum = 0;
    for (auto s : spec.sizes) {
      if (s == 0) fail(ErrorCode::kInvalidArgument, "explicit sizes must be positive");
      sum += s;
    }
    if (sum != spec.n) fail(ErrorCode::kInvalidArgument, "explicit sizes must sum to n");
  }
}

GeneratedGraph generate(const GenSpec& spec) {
  validate(spec);
  std::vector<std::size_t> sizes = spec.profile == SizeProfile::kExplicit
                                       ? spec.sizes
                                       : make_sizes(spec.n, spec.k, spec.profile, spec.moderate_ratio);
  std::vector<std::size_t> labels;
  labels.reserve(spec.n);
  for (std::size_t c = 0; c < sizes.size(); ++c) labels.insert(labels.end(), sizes[c], c);

  Rng rng(spec.seed);
  DenseMatrix w(spec.n, spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    for (std::size_t j = i + 1; j < spec.n; ++j) {
      if (spec.edge_keep_prob < 1.0 && !rng.bernoulli(spec.edge_keep_prob)) continue;
      double v = labels[i] == labels[j] ? rng.uniform(spec.intra_lo, spec.intra_hi)
                                        : rng.uniform(spec.inter_lo, spec.inter_hi);
      if (spec.noise_flip_prob > 0.0 && rng.bernoulli(spec.noise_flip_prob)) v = -v;
      w(i, j) = w(j, i) = v;
    }
  }
  return {SignedGraph::from_dense(w), Partition(std::move(labels)), std::move(sizes)};
}

}  // namespace gcsq
