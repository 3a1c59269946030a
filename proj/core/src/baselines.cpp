#include "gcsq/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "gcsq/error.hpp"
#include "gcsq/rng.hpp"

namespace gcsq {
namespace {

void check_k(std::size_t k, std::size_t n) {
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kOutOfRange, "cluster count k=" + std::to_string(k) +
                                            " outside [1, " + std::to_string(n) + "]");
  }
}

Partition from_groups(const std::vector<std::vector<std::size_t>>& groups, std::size_t n) {
  std::vector<std::size_t> labels(n, 0);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (auto v : groups[g]) labels[v] = g;
  }
  return Partition(std::move(labels));
}

}  // namespace

DissimilarityMatrix::DissimilarityMatrix(DenseMatrix d) : d_(std::move(d)) {
  if (d_.rows() == 0 || d_.rows() != d_.cols()) {
    throw Error(ErrorCode::kShapeMismatch, "dissimilarity matrix must be square and non-empty");
  }
  for (std::size_t i = 0; i < d_.rows(); ++i) {
    if (d_(i, i) != 0.0) {
      throw Error(ErrorCode::kInvalidArgument, "dissimilarity diagonal must be zero");
    }
    for (std::size_t j = 0; j < d_.cols(); ++j) {
      if (!std::isfinite(d_(i, j)) || d_(i, j) < 0.0) {
        throw Error(ErrorCode::kInvalidArgument, "dissimilarities must be finite and >= 0");
      }
      if (d_(i, j) != d_(j, i)) {
        throw Error(ErrorCode::kInvalidArgument, "dissimilarity matrix must be symmetric");
      }
    }
  }
}

DissimilarityMatrix to_dissimilarity(const SignedGraph& g, std::size_t* clamped) {
  const std::size_t n = g.size();
  DenseMatrix d(n, n);
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double w = g.weight(i, j);
      if (w > 1.0 || w < -1.0) {
        ++count;
        w = std::clamp(w, -1.0, 1.0);
      }
      d(i, j) = d(j, i) = 0.5 * (1.0 - w);
    }
  }
  if (clamped) *clamped = count;
  return DissimilarityMatrix(std::move(d));
}

Partition diana(const DissimilarityMatrix& d, std::size_t k) {
  const std::size_t n = d.size();
  check_k(k, n);
  std::vector<std::vector<std::size_t>> clusters(1, std::vector<std::size_t>(n));
  std::iota(clusters[0].begin(), clusters[0].end(), std::size_t{0});

  auto diameter = [&](const std::vector<std::size_t>& c) {
    double best = 0.0;
    for (std::size_t a = 0; a < c.size(); ++a) {
      for (std::size_t b = a + 1; b < c.size(); ++b) best = std::max(best, d(c[a], c[b]));
    }
    return best;
  };

  while (clusters.size() < k) {
    // Widest splittable cluster; ties to the one holding the lowest node.
    std::size_t target = clusters.size();
    double widest = -1.0;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      if (clusters[c].size() < 2) continue;
      const double diam = diameter(clusters[c]);
      if (diam > widest || (diam == widest && clusters[c].front() < clusters[target].front())) {
        widest = diam;
        target = c;
      }
    }

    std::vector<std::size_t> rest = std::move(clusters[target]);
    std::vector<std::size_t> splinter;

    // Seed: member with the largest mean dissimilarity to the others.
    std::size_t seed_pos = 0;
    double seed_score = -1.0;
    for (std::size_t a = 0; a < rest.size(); ++a) {
      double s = 0.0;
      for (std::size_t b = 0; b < rest.size(); ++b) s += d(rest[a], rest[b]);
      s /= static_cast<double>(rest.size() - 1);
      if (s > seed_score) {
        seed_score = s;
        seed_pos = a;
      }
    }
    splinter.push_back(rest[seed_pos]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(seed_pos));

    // Migrate while some member sits closer (on average) to the splinter group.
    while (rest.size() > 1) {
      std::size_t move_pos = rest.size();
      double best_gap = 0.0;
      for (std::size_t a = 0; a < rest.size(); ++a) {
        double to_rest = 0.0;
        for (auto v : rest) to_rest += d(rest[a], v);
        to_rest /= static_cast<double>(rest.size() - 1);
        double to_splinter = 0.0;
        for (auto v : splinter) to_splinter += d(rest[a], v);
        to_splinter /= static_cast<double>(splinter.size());
        const double gap = to_rest - to_splinter;
        if (gap > best_gap) {
          best_gap = gap;
          move_pos = a;
        }
      }
      if (move_pos == rest.size()) break;
      splinter.push_back(rest[move_pos]);
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(move_pos));
    }
    std::sort(splinter.begin(), splinter.end());
    clusters[target] = std::move(rest);
    clusters.push_back(std::move(splinter));
  }
  return from_groups(clusters, n);
}

Partition agglomerative(const DissimilarityMatrix& d, std::size_t k) {
  const std::size_t n = d.size();
  check_k(k, n);
  DenseMatrix dist = d.matrix();
  std::vector<std::vector<std::size_t>> members(n);
  for (std::size_t i = 0; i < n; ++i) members[i] = {i};
  std::vector<bool> active(n, true);
  std::size_t remaining = n;

  while (remaining > k) {
    std::size_t bi = n;
    std::size_t bj = n;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (active[j] && dist(i, j) < best) {
          best = dist(i, j);
          bi = i;
          bj = j;
        }
      }
    }
    const double ni = static_cast<double>(members[bi].size());
    const double nj = static_cast<double>(members[bj].size());
    for (std::size_t m = 0; m < n; ++m) {
      if (!active[m] || m == bi || m == bj) continue;
      const double merged = (ni * dist(bi, m) + nj * dist(bj, m)) / (ni + nj);
      dist(bi, m) = dist(m, bi) = merged;
    }
    members[bi].insert(members[bi].end(), members[bj].begin(), members[bj].end());
    members[bj].clear();
    active[bj] = false;
    --remaining;
  }

  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) {
    if (active[i]) groups.push_back(std::move(members[i]));
  }
  return from_groups(groups, n);
}

namespace {

struct MedoidCost {
  double cost = 0.0;
  std::vector<std::size_t> slot;  // nearest medoid slot per node
};

MedoidCost assign_to_medoids(const DissimilarityMatrix& d, const std::vector<std::size_t>& medoids) {
  const std::size_t n = d.size();
  MedoidCost out;
  out.slot.assign(n, 0);
  std::vector<std::size_t> medoid_slot(n, medoids.size());
  for (std::size_t s = 0; s < medoids.size(); ++s) medoid_slot[medoids[s]] = s;
  for (std::size_t i = 0; i < n; ++i) {
    if (medoid_slot[i] < medoids.size()) {
      out.slot[i] = medoid_slot[i];
      continue;
    }
    std::size_t best_slot = 0;
    double best = d(i, medoids[0]);
    for (std::size_t s = 1; s < medoids.size(); ++s) {
      if (d(i, medoids[s]) < best) {
        best = d(i, medoids[s]);
        best_slot = s;
      }
    }
    out.slot[i] = best_slot;
    out.cost += best;
  }
  return out;
}

std::vector<std::size_t> pam_build(const DissimilarityMatrix& d, std::size_t k) {
  const std::size_t n = d.size();
  std::vector<std::size_t> medoids;
  std::vector<bool> is_medoid(n, false);

  std::size_t first = 0;
  double best_sum = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < n; ++c) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += d(i, c);
    if (s < best_sum) {
      best_sum = s;
      first = c;
    }
  }
  medoids.push_back(first);
  is_medoid[first] = true;
  std::vector<double> nearest(n);
  for (std::size_t i = 0; i < n; ++i) nearest[i] = d(i, first);

  while (medoids.size() < k) {
    std::size_t pick = n;
    double best_gain = -1.0;
    for (std::size_t c = 0; c < n; ++c) {
      if (is_medoid[c]) continue;
      double gain = 0.0;
      for (std::size_t i = 0; i < n; ++i) gain += std::max(nearest[i] - d(i, c), 0.0);
      if (gain > best_gain) {
        best_gain = gain;
        pick = c;
      }
    }
    medoids.push_back(pick);
    is_medoid[pick] = true;
    for (std::size_t i = 0; i < n; ++i) nearest[i] = std::min(nearest[i], d(i, pick));
  }
  return medoids;
}

}  // namespace

PamResult pam_detailed(const DissimilarityMatrix& d, std::size_t k, std::uint64_t seed,
                       PamInit init) {
  const std::size_t n = d.size();
  check_k(k, n);
  std::vector<std::size_t> medoids;
  if (init == PamInit::kBuild) {
    medoids = pam_build(d, k);
  } else {
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    Rng rng(seed);
    for (std::size_t s = 0; s < k; ++s) {
      std::swap(pool[s], pool[s + rng.below(n - s)]);
      medoids.push_back(pool[s]);
    }
  }

  MedoidCost current = assign_to_medoids(d, medoids);
  std::vector<bool> is_medoid(n, false);
  for (auto m : medoids) is_medoid[m] = true;

  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t s = 0; s < k && !improved; ++s) {
      for (std::size_t c = 0; c < n && !improved; ++c) {
        if (is_medoid[c]) continue;
        std::vector<std::size_t> trial = medoids;
        trial[s] = c;
        MedoidCost candidate = assign_to_medoids(d, trial);
        if (candidate.cost < current.cost - 1e-12 * (1.0 + current.cost)) {
          is_medoid[medoids[s]] = false;
          is_medoid[c] = true;
          medoids = std::move(trial);
          current = std::move(candidate);
          improved = true;
        }
      }
    }
  }

  PamResult out;
  out.partition = Partition(current.slot);
  out.cost = current.cost;
  out.medoids.assign(out.partition.num_clusters(), 0);
  for (auto m : medoids) out.medoids[out.partition.label(m)] = m;
  return out;
}

Partition pam(const DissimilarityMatrix& d, std::size_t k, std::uint64_t seed) {
  return pam_detailed(d, k, seed).partition;
}

double silhouette_score(const DissimilarityMatrix& d, const Partition& p) {
  const std::size_t n = d.size();
  if (p.size() != n) {
    throw Error(ErrorCode::kShapeMismatch, "partition size does not match dissimilarity matrix");
  }
  const std::size_t k = p.num_clusters();
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "silhouette needs at least two clusters");
  const auto sizes = p.cluster_sizes();
  double total = 0.0;
  std::vector<double> sums(k);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t own = p.label(i);
    if (sizes[own] == 1) continue;
    std::fill(sums.begin(), sums.end(), 0.0);
    for (std::size_t j = 0; j < n; ++j) sums[p.label(j)] += d(i, j);
    const double a = sums[own] / static_cast<double>(sizes[own] - 1);
    double b = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < k; ++c) {
      if (c != own) b = std::min(b, sums[c] / static_cast<double>(sizes[c]));
    }
    const double denom = std::max(a, b);
    if (denom > 0.0) total += (b - a) / denom;
  }
  return total / static_cast<double>(n);
}

std::string_view method_name(BaselineMethod m) {
  switch (m) {
    case BaselineMethod::kDiana: return "diana";
    case BaselineMethod::kAgglomerative: return "agglomerative";
    case BaselineMethod::kPam: return "pam";
  }
  return "unknown";
}

Partition run_baseline(BaselineMethod m, const DissimilarityMatrix& d, std::size_t k,
                       std::uint64_t seed) {
  switch (m) {
    case BaselineMethod::kDiana: return diana(d, k);
    case BaselineMethod::kAgglomerative: return agglomerative(d, k);
    case BaselineMethod::kPam: return pam(d, k, seed);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown baseline method");
}

KSelection select_k(const DissimilarityMatrix& d, BaselineMethod m, std::size_t k_min,
                    std::size_t k_max, std::uint64_t seed) {
  if (k_min < 2) throw Error(ErrorCode::kOutOfRange, "select_k needs k_min >= 2");
  k_max = std::min(k_max, d.size());
  if (k_min > k_max) {
    throw Error(ErrorCode::kOutOfRange, "empty k range [" + std::to_string(k_min) + ", " +
                                            std::to_string(k_max) + "]");
  }
  KSelection best;
  best.silhouette = -std::numeric_limits<double>::infinity();
  for (std::size_t k = k_min; k <= k_max; ++k) {
    Partition p = run_baseline(m, d, k, seed);
    const double s = silhouette_score(d, p);
    if (s > best.silhouette) {
      best.k = k;
      best.silhouette = s;
      best.partition = std::move(p);
    }
  }
  return best;
}

}  // namespace gcsq
