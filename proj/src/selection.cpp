#include "curkit/selection.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <string>

#include "curkit/linalg.hpp"

namespace curkit {

namespace {

// Approximate singular vectors are accepted up to this orthonormality
// deviation; anything beyond it is rejected as not a basis.
constexpr double kOrthonormalityTol = 1e-6;

void require_orthonormal_columns(const DenseMatrix& u, const char* op) {
  const Index k = u.cols();
  const double deviation =
      (u.transpose() * u - DenseMatrix::Identity(k, k)).norm();
  if (!(deviation <= kOrthonormalityTol)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3e", deviation);
    throw std::invalid_argument(
        std::string(op) +
        ": input columns are not orthonormal (||u'u - I||_F = " + buf +
        " exceeds 1e-6)");
  }
}

// Indices of the k_sel largest scores, non-increasing score order, ties
// toward the lowest index.
IndexList top_indices(const Vector& scores, Index k_sel) {
  IndexList order(static_cast<std::size_t>(scores.size()));
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&scores](Index a, Index b) {
    if (scores(a) != scores(b)) return scores(a) > scores(b);
    return a < b;
  });
  order.resize(static_cast<std::size_t>(k_sel));
  return order;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

}  // namespace

const char* method_name(Method method) {
  switch (method) {
    case Method::deim:
      return "deim";
    case Method::ldeim:
      return "ldeim";
    case Method::qdeim:
      return "qdeim";
    case Method::leverage:
      return "leverage";
  }
  throw std::invalid_argument("method_name: unknown method");
}

Method method_from_name(const std::string& name) {
  if (name == "deim") return Method::deim;
  if (name == "ldeim") return Method::ldeim;
  if (name == "qdeim") return Method::qdeim;
  if (name == "leverage") return Method::leverage;
  throw std::invalid_argument("unknown selection method '" + name + "'");
}

DeimResult deim_detail(const DenseMatrix& u) {
  const Index m = u.rows();
  const Index k = u.cols();
  if (k < 1) {
    throw std::invalid_argument("deim_select: basis must have >= 1 column");
  }
  if (k > m) {
    throw std::invalid_argument("deim_select: more columns than rows (" +
                                std::to_string(k) + " > " + std::to_string(m) +
                                ")");
  }
  require_orthonormal_columns(u, "deim_select");

  DeimResult out;
  out.indices.reserve(static_cast<std::size_t>(k));
  out.scores.reserve(static_cast<std::size_t>(k));
  out.residual = u;
  DenseMatrix& w = out.residual;

  for (Index j = 0; j < k; ++j) {
    if (j > 0) {
      // Interpolatory deflation against the previously processed columns:
      // the j x j system is built from the residual basis at the selected
      // indices, so it is triangular in exact arithmetic.
      DenseMatrix sub(j, j);
      DenseMatrix rhs(j, 1);
      for (Index r = 0; r < j; ++r) {
        const Index row = out.indices[static_cast<std::size_t>(r)];
        sub.row(r) = w.block(row, 0, 1, j);
        rhs(r, 0) = w(row, j);
      }
      DenseMatrix coef;
      try {
        coef = solve_small(sub, rhs);
      } catch (const std::runtime_error& e) {
        throw std::runtime_error("deim_select: deflation step " +
                                 std::to_string(j) + ": " + e.what());
      }
      w.col(j) -= w.leftCols(j) * coef;
    }
    Index imax = 0;
    const double score = w.col(j).cwiseAbs().maxCoeff(&imax);
    out.indices.push_back(imax);
    out.scores.push_back(score);
  }
  return out;
}

IndexList deim_select(const DenseMatrix& u) {
  return deim_detail(u).indices;
}

LdeimResult ldeim_detail(const DenseMatrix& u, Index k_hat) {
  const Index m = u.rows();
  const Index k = u.cols();
  if (k_hat < k) {
    throw std::invalid_argument(
        "ldeim_select: k_hat = " + std::to_string(k_hat) +
        " is smaller than the number of singular vectors " +
        std::to_string(k));
  }
  if (k_hat > m) {
    throw std::invalid_argument(
        "ldeim_select: k_hat = " + std::to_string(k_hat) +
        " exceeds the number of candidate indices " + std::to_string(m));
  }

  DeimResult deim = deim_detail(u);
  LdeimResult out;
  out.indices = std::move(deim.indices);
  out.scores = std::move(deim.scores);
  if (k_hat == k) {
    return out;  // reduces to standard DEIM
  }

  // Row 2-norms of the residual basis, excluding already-selected indices;
  // append the k_hat - k largest.
  const Vector row_norms = deim.residual.rowwise().norm();
  std::vector<bool> taken(static_cast<std::size_t>(m), false);
  for (Index idx : out.indices) taken[static_cast<std::size_t>(idx)] = true;

  IndexList candidates;
  candidates.reserve(static_cast<std::size_t>(m - k));
  for (Index i = 0; i < m; ++i) {
    if (!taken[static_cast<std::size_t>(i)]) candidates.push_back(i);
  }
  std::sort(candidates.begin(), candidates.end(),
            [&row_norms](Index a, Index b) {
              if (row_norms(a) != row_norms(b))
                return row_norms(a) > row_norms(b);
              return a < b;
            });
  for (Index t = 0; t < k_hat - k; ++t) {
    const Index idx = candidates[static_cast<std::size_t>(t)];
    out.indices.push_back(idx);
    out.scores.push_back(row_norms(idx));
  }
  return out;
}

IndexList ldeim_select(const DenseMatrix& u, Index k_hat) {
  return ldeim_detail(u, k_hat).indices;
}

QdeimResult qdeim_detail(const DenseMatrix& basis, Index k_sel) {
  const Index dim = basis.rows();
  if (k_sel < 1 || k_sel > dim) {
    throw std::invalid_argument(
        "qdeim_select: k_sel = " + std::to_string(k_sel) +
        " out of range [1, " + std::to_string(dim) + "]");
  }
  require_orthonormal_columns(basis, "qdeim_select");
  const PivotedQr qr = pivoted_qr_select(basis.transpose(), k_sel);
  QdeimResult out;
  out.indices = qr.pivot_order;
  const Vector diag = qr.r_diagonal();
  out.scores.assign(diag.data(), diag.data() + diag.size());
  return out;
}

IndexList qdeim_select(const DenseMatrix& basis, Index k_sel) {
  return qdeim_detail(basis, k_sel).indices;
}

IndexList qdeim_select(const DenseMatrix& basis) {
  return qdeim_detail(basis, basis.cols()).indices;
}

Vector leverage_scores(const DenseMatrix& v) {
  require_orthonormal_columns(v, "leverage_scores");
  return v.rowwise().squaredNorm();
}

IndexList leverage_select(const DenseMatrix& v, Index k_sel) {
  const Index n = v.rows();
  if (k_sel < 1 || k_sel > n) {
    throw std::invalid_argument(
        "leverage_select: k_sel = " + std::to_string(k_sel) +
        " out of range [1, " + std::to_string(n) + "]");
  }
  return top_indices(leverage_scores(v), k_sel);
}

SelectionReport select_with_report(Method method, const DenseMatrix& basis,
                                   Index k_sel) {
  SelectionReport report;
  report.method = method;
  const auto start = std::chrono::steady_clock::now();
  switch (method) {
    case Method::deim: {
      if (k_sel != basis.cols()) {
        throw std::invalid_argument(
            "select_with_report: deim selects exactly cols(basis) indices");
      }
      DeimResult r = deim_detail(basis);
      report.indices = std::move(r.indices);
      report.scores = std::move(r.scores);
      break;
    }
    case Method::ldeim: {
      LdeimResult r = ldeim_detail(basis, k_sel);
      report.indices = std::move(r.indices);
      report.scores = std::move(r.scores);
      break;
    }
    case Method::qdeim: {
      QdeimResult r = qdeim_detail(basis, k_sel);
      report.indices = std::move(r.indices);
      report.scores = std::move(r.scores);
      break;
    }
    case Method::leverage: {
      const Vector scores = leverage_scores(basis);
      if (k_sel < 1 || k_sel > basis.rows()) {
        throw std::invalid_argument(
            "select_with_report: leverage k_sel out of range");
      }
      report.indices = top_indices(scores, k_sel);
      report.scores.reserve(static_cast<std::size_t>(k_sel));
      for (Index idx : report.indices) report.scores.push_back(scores(idx));
      break;
    }
  }
  report.selection_seconds = seconds_since(start);
  return report;
}

}  // namespace curkit
