#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>

#include "gcsq/dense_matrix.hpp"
#include "gcsq/signed_graph.hpp"

namespace gcsq {

/// Symmetric dissimilarity with zero diagonal, d_ij = (1 - w_ij) / 2.
class DissimilarityMatrix {
 public:
  /// Validates symmetry, zero diagonal, finiteness and non-negativity.
  explicit DissimilarityMatrix(DenseMatrix d);

  std::size_t size() const noexcept { return d_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return d_(i, j); }
  const DenseMatrix& matrix() const noexcept { return d_; }

 private:
  DenseMatrix d_;
};

/// Weights outside [-1, 1] are clamped; the number of clamped entries
/// (upper triangle) is written to `clamped` when provided.
DissimilarityMatrix to_dissimilarity(const SignedGraph& g, std::size_t* clamped = nullptr);

/// DIANA divisive clustering down to exactly k clusters. Ties go to the
/// lowest node index.
Partition diana(const DissimilarityMatrix& d, std::size_t k);

/// Average-linkage agglomeration (Lance-Williams update) until k clusters
/// remain. Equal distances merge the pair with the smallest (i, j) slots.
Partition agglomerative(const DissimilarityMatrix& d, std::size_t k);

enum class PamInit { kBuild, kRandom };

struct PamResult {
  Partition partition;
  std::vector<std::size_t> medoids;  // medoids[label]
  double cost = 0.0;
};

/// Partitioning Around Medoids. BUILD (or seeded random medoids with
/// PamInit::kRandom) followed by first-improvement SWAP scanned in
/// (medoid slot, candidate) order.
PamResult pam_detailed(const DissimilarityMatrix& d, std::size_t k, std::uint64_t seed = 0,
                       PamInit init = PamInit::kBuild);
Partition pam(const DissimilarityMatrix& d, std::size_t k, std::uint64_t seed = 0);

/// Mean silhouette; singleton clusters contribute 0. Needs k >= 2.
double silhouette_score(const DissimilarityMatrix& d, const Partition& p);

enum class BaselineMethod { kDiana, kAgglomerative, kPam };

std::string_view method_name(BaselineMethod m);

Partition run_baseline(BaselineMethod m, const DissimilarityMatrix& d, std::size_t k,
                       std::uint64_t seed = 0);

struct KSelection {
  std::size_t k = 0;
  Partition partition;
  double silhouette = 0.0;
};

/// Runs `m` for every k in [k_min, k_max] and keeps the best silhouette;
/// ties go to the smaller k. k_min must be >= 2.
KSelection select_k(const DissimilarityMatrix& d, BaselineMethod m, std::size_t k_min,
                    std::size_t k_max, std::uint64_t seed = 0);

}  // namespace gcsq
