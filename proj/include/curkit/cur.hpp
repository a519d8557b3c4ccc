#ifndef CURKIT_CUR_HPP
#define CURKIT_CUR_HPP

#include "curkit/linalg.hpp"
#include "curkit/types.hpp"

namespace curkit {

// CUR factors A ~= C * M * R. C and R are verbatim column/row sub-blocks of
// A at col_idx/row_idx; M is the Frobenius-optimal middle matrix for the
// fixed C and R. Equal numbers of rows and columns are selected, so M is
// square.
struct CurFactors {
  DenseMatrix c;      // m x k_hat
  DenseMatrix m_mid;  // k_hat x k_hat
  DenseMatrix r;      // k_hat x n
  IndexList col_idx;
  IndexList row_idx;
};

// Spectral-error bound diagnostic:
//   bound_value = (1/sigma_min_vp + 1/sigma_min_su) * sigma_k_plus_1,
// checked against the observed error ||A - CMR||. The bound is verified as
// an upper bound only; exceeds_bound flags observed > bound * (1 + 1e-8)
// without failing.
struct BoundReport {
  double sigma_min_vp = 0.0;
  double sigma_min_su = 0.0;
  double sigma_k_plus_1 = 0.0;
  double bound_value = 0.0;
  double observed_error = 0.0;
  bool exceeds_bound = false;
};

// Extracts C and R and computes M = (C^T C)^-1 C^T A R^T (R R^T)^-1 via two
// least-squares solves. Rank-deficient C or R is reported with the
// offending side named.
CurFactors build_cur(const DenseMatrix& a, const IndexList& col_idx,
                     const IndexList& row_idx);

// ||A - CMR|| / ||A|| in the spectral norm.
double relative_error(const DenseMatrix& a, const CurFactors& f);

// Evaluates the error bound for the given rank-k singular vectors and the
// (k+1)-st singular value (pass 0 when k equals the rank of A).
BoundReport bound_diagnostic(const DenseMatrix& a, const TruncatedSvd& svd,
                             const CurFactors& f, double sigma_k_plus_1);

}  // namespace curkit

#endif  // CURKIT_CUR_HPP
