#include "gcsq/dense_matrix.hpp"

#include "gcsq/error.hpp"

namespace gcsq {

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorCode::kShapeMismatch, "ragged initializer for DenseMatrix");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

}  // namespace gcsq
