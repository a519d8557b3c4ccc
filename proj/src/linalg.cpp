#include "curkit/linalg.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/QR>
#include <Eigen/SVD>

namespace curkit {

namespace {

constexpr double kSingularCondLimit = 1e14;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", x);
  return buf;
}

}  // namespace

Vector PivotedQr::r_diagonal() const {
  Vector d(static_cast<Index>(pivot_order.size()));
  for (std::size_t i = 0; i < pivot_order.size(); ++i) {
    d(static_cast<Index>(i)) =
        std::abs(r(static_cast<Index>(i), pivot_order[i]));
  }
  return d;
}

TruncatedSvd truncated_svd(const DenseMatrix& a, Index k) {
  const Index min_dim = std::min(a.rows(), a.cols());
  if (k < 1 || k > min_dim) {
    throw std::invalid_argument("truncated_svd: k = " + std::to_string(k) +
                                " out of range [1, " +
                                std::to_string(min_dim) + "]");
  }
  Eigen::JacobiSVD<DenseMatrix> svd(a,
                                    Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) {
    throw std::runtime_error("truncated_svd: decomposition failed to converge");
  }
  TruncatedSvd out;
  out.u = svd.matrixU().leftCols(k);
  out.v = svd.matrixV().leftCols(k);
  out.sigma = svd.singularValues().head(k);

  // Deterministic signs: largest-magnitude entry of each left singular
  // vector made nonnegative.
  for (Index j = 0; j < k; ++j) {
    Index imax = 0;
    out.u.col(j).cwiseAbs().maxCoeff(&imax);
    if (out.u(imax, j) < 0.0) {
      out.u.col(j) = -out.u.col(j);
      out.v.col(j) = -out.v.col(j);
    }
  }
  return out;
}

PivotedQr pivoted_qr_select(const DenseMatrix& b, Index k) {
  const Index n = b.cols();
  if (k < 1 || k > n) {
    throw std::invalid_argument("pivoted_qr_select: k = " + std::to_string(k) +
                                " out of range [1, " + std::to_string(n) +
                                "]");
  }
  DenseMatrix residual = b;
  std::vector<bool> used(static_cast<std::size_t>(n), false);

  PivotedQr out;
  out.pivot_order.reserve(static_cast<std::size_t>(k));
  out.r = DenseMatrix::Zero(k, n);

  for (Index step = 0; step < k; ++step) {
    Index best = -1;
    double best_sq = -1.0;
    for (Index j = 0; j < n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      const double sq = residual.col(j).squaredNorm();
      if (sq > best_sq) {
        best_sq = sq;
        best = j;
      }
    }
    used[static_cast<std::size_t>(best)] = true;
    out.pivot_order.push_back(best);

    const double nrm = std::sqrt(best_sq);
    out.r(step, best) = nrm;
    if (nrm > 0.0) {
      const Vector q = residual.col(best) / nrm;
      for (Index j = 0; j < n; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        const double coef = q.dot(residual.col(j));
        out.r(step, j) = coef;
        residual.col(j) -= coef * q;
      }
      residual.col(best).setZero();
    }
  }
  return out;
}

DenseMatrix solve_small(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("solve_small: matrix must be square");
  }
  if (b.rows() != a.rows()) {
    throw std::invalid_argument("solve_small: right-hand side has " +
                                std::to_string(b.rows()) + " rows, expected " +
                                std::to_string(a.rows()));
  }
  if (a.rows() == 0) {
    return DenseMatrix(0, b.cols());
  }
  Eigen::JacobiSVD<DenseMatrix> svd(a);
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(a.rows() - 1);
  if (smax <= 0.0 || smin <= 0.0 || smax / smin > kSingularCondLimit) {
    const double cond = smin > 0.0 ? smax / smin
                                   : std::numeric_limits<double>::infinity();
    throw std::runtime_error(
        "solve_small: matrix singular to working precision (condition "
        "estimate " +
        fmt(cond) + " exceeds " + fmt(kSingularCondLimit) + ")");
  }
  return a.partialPivLu().solve(b);
}

DenseMatrix least_squares(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() < a.cols()) {
    throw std::invalid_argument("least_squares: system is underdetermined (" +
                                std::to_string(a.rows()) + " rows < " +
                                std::to_string(a.cols()) + " cols)");
  }
  if (b.rows() != a.rows()) {
    throw std::invalid_argument("least_squares: right-hand side has " +
                                std::to_string(b.rows()) + " rows, expected " +
                                std::to_string(a.rows()));
  }
  Eigen::ColPivHouseholderQR<DenseMatrix> qr(a);
  if (qr.rank() < a.cols()) {
    throw std::runtime_error("least_squares: rank-deficient matrix (rank " +
                             std::to_string(qr.rank()) + " of " +
                             std::to_string(a.cols()) + " columns)");
  }
  return qr.solve(b);
}

double spectral_norm(const DenseMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<DenseMatrix> svd(a);
  return svd.singularValues()(0);
}

double sigma_min(const DenseMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<DenseMatrix> svd(a);
  return svd.singularValues()(std::min(a.rows(), a.cols()) - 1);
}

}  // namespace curkit
