#include "gcsq/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gcsq/csv.hpp"
#include "gcsq/error.hpp"
#include "gcsq/rng.hpp"

namespace gcsq {

FeatureMatrix load_feature_csv(const std::filesystem::path& path, bool has_header) {
  CsvTable t = read_csv_file(path, has_header);
  for (double v : t.values.data()) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kNonFinite, path.string() + ": non-finite feature value");
    }
  }
  return {std::move(t.values), std::move(t.header)};
}

FeatureMatrix sample_rows(const FeatureMatrix& x, double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "row sampling fraction must lie in (0, 1]");
  }
  if (fraction == 1.0) return x;
  Rng rng(seed);
  std::vector<std::size_t> keep;
  for (std::size_t r = 0; r < x.values.rows(); ++r) {
    if (rng.bernoulli(fraction)) keep.push_back(r);
  }
  // Top up in row order so the correlation stays defined.
  for (std::size_t r = 0; keep.size() < std::min<std::size_t>(2, x.values.rows()); ++r) {
    if (std::find(keep.begin(), keep.end(), r) == keep.end()) keep.push_back(r);
  }
  std::sort(keep.begin(), keep.end());
  FeatureMatrix out{DenseMatrix(keep.size(), x.values.cols()), x.names};
  for (std::size_t r = 0; r < keep.size(); ++r) {
    std::copy_n(x.values.row(keep[r]).begin(), x.values.cols(), out.values.row(r).begin());
  }
  return out;
}

CorrelationGraph pearson_matrix(const FeatureMatrix& x, const PearsonOptions& opts) {
  const std::size_t m = x.values.rows();
  const std::size_t f = x.values.cols();
  if (m < 2) throw Error(ErrorCode::kInvalidArgument, "Pearson correlation needs at least 2 samples");
  if (f < 2) throw Error(ErrorCode::kInvalidArgument, "Pearson correlation needs at least 2 features");

  // Pass one: means. Pass two: centered columns and their sums of squares.
  std::vector<std::vector<double>> centered(f, std::vector<double>(m));
  std::vector<double> sumsq(f, 0.0);
  std::vector<std::size_t> kept_features;
  std::vector<std::size_t> dropped_features;
  for (std::size_t c = 0; c < f; ++c) {
    double mean = 0.0;
    for (std::size_t r = 0; r < m; ++r) mean += x.values(r, c);
    mean /= static_cast<double>(m);
    double ss = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
      const double v = x.values(r, c) - mean;
      if (!std::isfinite(v)) throw Error(ErrorCode::kNonFinite, "non-finite feature value");
      centered[c][r] = v;
      ss += v * v;
    }
    sumsq[c] = ss;
    if (ss == 0.0) {
      if (!opts.drop_constant) {
        const std::string label = c < x.names.size() ? x.names[c] : std::to_string(c);
        throw Error(ErrorCode::kInvalidArgument,
                    "feature '" + label + "' is constant; pass --drop-constant to skip it");
      }
      dropped_features.push_back(c);
    } else {
      kept_features.push_back(c);
    }
  }
  const std::size_t kept = kept_features.size();
  if (kept == 0) throw Error(ErrorCode::kInvalidArgument, "every feature is constant");

  DenseMatrix w(kept, kept);
  for (std::size_t a = 0; a < kept; ++a) {
    const auto& ca = centered[kept_features[a]];
    for (std::size_t b = a + 1; b < kept; ++b) {
      const auto& cb = centered[kept_features[b]];
      double dot = 0.0;
      for (std::size_t r = 0; r < m; ++r) dot += ca[r] * cb[r];
      // sqrt(ss * ss) == ss exactly, so duplicated columns give exactly 1.
      const double r_ab = dot / std::sqrt(sumsq[kept_features[a]] * sumsq[kept_features[b]]);
      w(a, b) = w(b, a) = std::clamp(r_ab, -1.0, 1.0);
    }
  }
  return {SignedGraph::from_dense(w), std::move(kept_features), std::move(dropped_features)};
}

SignedGraph correlation_graph_from_matrix(const DenseMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kShapeMismatch, "correlation matrix is " + std::to_string(m.rows()) +
                                               "x" + std::to_string(m.cols()) + ", expected square");
  }
  constexpr double kSlack = 1e-6;
  DenseMatrix clamped = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const double v = m(i, j);
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::kNonFinite, "non-finite correlation at (" + std::to_string(i) +
                                               ", " + std::to_string(j) + ")");
      }
      if (v > 1.0 + kSlack || v < -1.0 - kSlack) {
        throw Error(ErrorCode::kOutOfRange, "correlation " + std::to_string(v) + " at (" +
                                                std::to_string(i) + ", " + std::to_string(j) +
                                                ") outside [-1, 1]");
      }
      clamped(i, j) = std::clamp(v, -1.0, 1.0);
    }
  }
  return SignedGraph::from_dense(clamped);
}

SignedGraph load_correlation_csv(const std::filesystem::path& path, bool has_header) {
  CsvTable t = read_csv_file(path, has_header);
  try {
    return correlation_graph_from_matrix(t.values);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

}  // namespace gcsq
