#ifndef CURKIT_TYPES_HPP
#define CURKIT_TYPES_HPP

#include <vector>

#include <Eigen/Dense>

namespace curkit {

using DenseMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Ordered list of unique 0-based row or column indices.
using IndexList = std::vector<Index>;

bool all_finite(const DenseMatrix& a);

// Throws std::invalid_argument unless every entry is unique and < dim.
void validate_index_list(const IndexList& indices, Index dim, const char* what);

DenseMatrix select_columns(const DenseMatrix& a, const IndexList& cols);
DenseMatrix select_rows(const DenseMatrix& a, const IndexList& rows);

}  // namespace curkit

#endif  // CURKIT_TYPES_HPP
