#include "curkit/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace curkit {

bool all_finite(const DenseMatrix& a) {
  return a.allFinite();
}

void validate_index_list(const IndexList& indices, Index dim,
                         const char* what) {
  std::unordered_set<Index> seen;
  seen.reserve(indices.size());
  for (Index idx : indices) {
    if (idx < 0 || idx >= dim) {
      throw std::invalid_argument(std::string(what) + ": index " +
                                  std::to_string(idx) +
                                  " out of range [0, " + std::to_string(dim) +
                                  ")");
    }
    if (!seen.insert(idx).second) {
      throw std::invalid_argument(std::string(what) + ": repeated index " +
                                  std::to_string(idx));
    }
  }
}

DenseMatrix select_columns(const DenseMatrix& a, const IndexList& cols) {
  validate_index_list(cols, a.cols(), "select_columns");
  return a(Eigen::all, cols);
}

DenseMatrix select_rows(const DenseMatrix& a, const IndexList& rows) {
  validate_index_list(rows, a.rows(), "select_rows");
  return a(rows, Eigen::all);
}

}  // namespace curkit
