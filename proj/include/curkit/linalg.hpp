#ifndef CURKIT_LINALG_HPP
#define CURKIT_LINALG_HPP

#include "curkit/types.hpp"

namespace curkit {

// Leading singular triplets of a matrix. u (m x k) and v (n x k) have
// orthonormal columns, sigma is non-increasing. Signs are normalized so the
// largest-magnitude entry of each left singular vector is nonnegative.
struct TruncatedSvd {
  DenseMatrix u;
  DenseMatrix v;
  Vector sigma;

  Index rank() const { return sigma.size(); }
};

// Result of greedy Businger-Golub column pivoting: pivot_order lists the
// selected column indices in selection order; r keeps the triangular factor
// rows for diagnostics, indexed by original column.
struct PivotedQr {
  IndexList pivot_order;
  DenseMatrix r;  // k x cols(b)

  // |r(i, pivot_order[i])|, non-increasing along the pivot sequence.
  Vector r_diagonal() const;
};

TruncatedSvd truncated_svd(const DenseMatrix& a, Index k);

// Greedy column-pivoted QR: each step selects the remaining column of
// largest residual 2-norm (ties toward the lowest index) and orthogonalizes
// the rest against it. Returns the first k pivots.
PivotedQr pivoted_qr_select(const DenseMatrix& b, Index k);

// Solves the square system a*x = b via pivoted LU. Throws when a is
// singular to working precision (condition estimate > 1e14).
DenseMatrix solve_small(const DenseMatrix& a, const DenseMatrix& b);

// argmin_x ||a*x - b||_F via column-pivoted QR; a must have full column
// rank (reported otherwise).
DenseMatrix least_squares(const DenseMatrix& a, const DenseMatrix& b);

double spectral_norm(const DenseMatrix& a);

// Smallest singular value; 0 for rank-deficient input.
double sigma_min(const DenseMatrix& a);

}  // namespace curkit

#endif  // CURKIT_LINALG_HPP
