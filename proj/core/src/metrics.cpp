#include "gcsq/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "gcsq/error.hpp"

namespace gcsq {
namespace {

double entropy(const std::vector<std::size_t>& counts, double n) {
  double h = 0.0;
  for (auto c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    h -= p * std::log(p);
  }
  return h;
}

void check_sizes(std::span<const std::size_t> sizes) {
  if (sizes.empty()) throw Error(ErrorCode::kInvalidArgument, "size list is empty");
  for (auto s : sizes) {
    if (s == 0) throw Error(ErrorCode::kInvalidArgument, "cluster sizes must be positive");
  }
}

// Newman Q on one sign part; `part` maps a raw weight to its non-negative
// contribution (w+ or |w-|). Returns {Q, total part weight}.
template <typename Part>
std::pair<double, double> part_modularity(const SignedGraph& g, const Partition& p, Part part) {
  const std::size_t n = g.size();
  const std::size_t k = p.num_clusters();
  std::vector<double> intra(k, 0.0);
  std::vector<double> incident(k, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double w = part(g.weight(i, j));
      if (w == 0.0) continue;
      total += w;
      incident[p.label(i)] += w;
      incident[p.label(j)] += w;
      if (p.label(i) == p.label(j)) intra[p.label(i)] += w;
    }
  }
  if (total == 0.0) return {0.0, 0.0};
  double q = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    const double e = intra[c] / total;
    const double a = incident[c] / (2.0 * total);
    q += e - a * a;
  }
  return {q, total};
}

}  // namespace

double nmi(const Partition& a, const Partition& b, NmiNormalization norm) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kShapeMismatch, "NMI of partitions with different lengths");
  }
  if (a.size() == 0) throw Error(ErrorCode::kInvalidArgument, "NMI of empty partitions");
  const double n = static_cast<double>(a.size());
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> joint;
  for (std::size_t i = 0; i < a.size(); ++i) ++joint[{a.label(i), b.label(i)}];
  const auto size_a = a.cluster_sizes();
  const auto size_b = b.cluster_sizes();
  const double ha = entropy(size_a, n);
  const double hb = entropy(size_b, n);
  if (ha == 0.0 && hb == 0.0) return 1.0;
  if (ha == 0.0 || hb == 0.0) return 0.0;
  // Identical up to relabeling: report 1 exactly rather than a rounded ratio.
  if (joint.size() == size_a.size() && joint.size() == size_b.size()) return 1.0;

  double mi = 0.0;
  for (const auto& [cell, count] : joint) {
    const double pij = static_cast<double>(count) / n;
    const double pi = static_cast<double>(size_a[cell.first]) / n;
    const double pj = static_cast<double>(size_b[cell.second]) / n;
    mi += pij * std::log(pij / (pi * pj));
  }
  double denom = 0.0;
  switch (norm) {
    case NmiNormalization::kSqrt: denom = std::sqrt(ha * hb); break;
    case NmiNormalization::kMin: denom = std::min(ha, hb); break;
    case NmiNormalization::kMax: denom = std::max(ha, hb); break;
    case NmiNormalization::kArithmetic: denom = 0.5 * (ha + hb); break;
  }
  return std::clamp(mi / denom, 0.0, 1.0);
}

double modularity(const SignedGraph& g, const Partition& p) {
  if (p.size() != g.size()) {
    throw Error(ErrorCode::kShapeMismatch, "partition size does not match graph");
  }
  const auto [q_pos, w_pos] = part_modularity(g, p, [](double w) { return w > 0.0 ? w : 0.0; });
  const auto [q_neg, w_neg] = part_modularity(g, p, [](double w) { return w < 0.0 ? -w : 0.0; });
  if (w_pos + w_neg == 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "modularity is undefined on an all-zero graph");
  }
  return (w_pos * q_pos - w_neg * q_neg) / (w_pos + w_neg);
}

double gini(std::span<const std::size_t> sizes) {
  check_sizes(sizes);
  const double n = static_cast<double>(sizes.size());
  double sum = 0.0;
  double diff = 0.0;
  for (auto si : sizes) {
    sum += static_cast<double>(si);
    for (auto sj : sizes) diff += std::abs(static_cast<double>(si) - static_cast<double>(sj));
  }
  const double mean = sum / n;
  return diff / (2.0 * n * n * mean);
}

double size_ratio(std::span<const std::size_t> sizes) {
  check_sizes(sizes);
  const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
  return static_cast<double>(*hi) / static_cast<double>(*lo);
}

MetricReport report(const SignedGraph& g, const Partition& p, const Partition* truth) {
  MetricReport r;
  const auto sizes = p.cluster_sizes();
  r.k = p.num_clusters();
  r.modularity = modularity(g, p);
  r.gini = gini(sizes);
  r.size_ratio = size_ratio(sizes);
  r.agreement = intra_agreement(g, p);
  if (truth) r.nmi = nmi(p, *truth);
  return r;
}

}  // namespace gcsq
