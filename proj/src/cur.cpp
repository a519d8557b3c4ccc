#include "curkit/cur.hpp"

#include <stdexcept>
#include <string>

namespace curkit {

CurFactors build_cur(const DenseMatrix& a, const IndexList& col_idx,
                     const IndexList& row_idx) {
  validate_index_list(col_idx, a.cols(), "build_cur: col_idx");
  validate_index_list(row_idx, a.rows(), "build_cur: row_idx");
  if (col_idx.empty()) {
    throw std::invalid_argument("build_cur: no indices selected");
  }
  if (col_idx.size() != row_idx.size()) {
    throw std::invalid_argument(
        "build_cur: equal numbers of columns and rows must be selected (" +
        std::to_string(col_idx.size()) + " vs " +
        std::to_string(row_idx.size()) + ")");
  }

  CurFactors f;
  f.col_idx = col_idx;
  f.row_idx = row_idx;
  f.c = a(Eigen::all, col_idx);
  f.r = a(row_idx, Eigen::all);

  // M = (C^T C)^-1 C^T A R^T (R R^T)^-1, formed as two least-squares solves
  // instead of explicit inverses.
  DenseMatrix c_pinv_a;
  try {
    c_pinv_a = least_squares(f.c, a);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(std::string("build_cur: column block C: ") +
                             e.what());
  }
  try {
    f.m_mid = least_squares(f.r.transpose(), c_pinv_a.transpose()).transpose();
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(std::string("build_cur: row block R: ") +
                             e.what());
  }
  return f;
}

double relative_error(const DenseMatrix& a, const CurFactors& f) {
  if (a.rows() != f.c.rows() || a.cols() != f.r.cols()) {
    throw std::invalid_argument("relative_error: incompatible shapes");
  }
  const double denom = spectral_norm(a);
  if (denom == 0.0) {
    throw std::invalid_argument("relative_error: zero matrix");
  }
  return spectral_norm(a - f.c * f.m_mid * f.r) / denom;
}

BoundReport bound_diagnostic(const DenseMatrix& a, const TruncatedSvd& svd,
                             const CurFactors& f, double sigma_k_plus_1) {
  if (!(sigma_k_plus_1 >= 0.0)) {
    throw std::invalid_argument("bound_diagnostic: sigma_k_plus_1 must be >= 0");
  }
  const Index k = svd.rank();
  const Index k_hat = static_cast<Index>(f.row_idx.size());
  if (k_hat < k) {
    throw std::invalid_argument(
        "bound_diagnostic: fewer selected indices than singular vectors");
  }

  // sigma_min(S^T U) and sigma_min(V^T P) from the selected rows of the
  // singular-vector blocks.
  const DenseMatrix u_sel = select_rows(svd.u, f.row_idx);
  const DenseMatrix v_sel = select_rows(svd.v, f.col_idx);

  BoundReport report;
  report.sigma_min_su = sigma_min(u_sel);
  report.sigma_min_vp = sigma_min(v_sel);
  report.sigma_k_plus_1 = sigma_k_plus_1;
  if (report.sigma_min_su <= 0.0) {
    throw std::runtime_error("bound_diagnostic: S'U is rank-deficient");
  }
  if (report.sigma_min_vp <= 0.0) {
    throw std::runtime_error("bound_diagnostic: V'P is rank-deficient");
  }
  report.bound_value =
      (1.0 / report.sigma_min_vp + 1.0 / report.sigma_min_su) * sigma_k_plus_1;
  report.observed_error = spectral_norm(a - f.c * f.m_mid * f.r);
  report.exceeds_bound =
      report.observed_error > report.bound_value * (1.0 + 1e-8);
  return report;
}

}  // namespace curkit
