#ifndef CURKIT_SELECTION_HPP
#define CURKIT_SELECTION_HPP

#include <string>
#include <vector>

#include "curkit/types.hpp"

namespace curkit {

enum class Method { deim, ldeim, qdeim, leverage };

const char* method_name(Method method);
Method method_from_name(const std::string& name);

// One index-selection run: the method, the chosen indices, the per-index
// scores that drove each choice (residual magnitudes, row norms, leverage
// scores, or pivot magnitudes), and the wall-clock time of the selection
// call itself. Singular-vector computation is never included in the time.
struct SelectionReport {
  Method method = Method::deim;
  IndexList indices;
  std::vector<double> scores;
  double selection_seconds = 0.0;
};

// DEIM output plus the residual basis it leaves behind. Column j of
// `residual` holds the deflated form of u(:,j) as of the step where its
// index was chosen; column 0 is the original first singular vector.
struct DeimResult {
  IndexList indices;
  std::vector<double> scores;  // |residual| at each selected index
  DenseMatrix residual;        // m x k
};

// Greedy DEIM over an orthonormal basis u (m x k): the first index is the
// argmax of |u(:,0)|; each later column is deflated by the interpolatory
// projection onto the previously processed columns at the selected indices
// before its own argmax. Selects exactly k indices, ties toward the lowest
// index.
DeimResult deim_detail(const DenseMatrix& u);
IndexList deim_select(const DenseMatrix& u);

struct LdeimResult {
  IndexList indices;
  std::vector<double> scores;
};

// L-DEIM: runs DEIM on the k available singular vectors, then appends the
// k_hat - k indices whose residual-basis rows have the largest 2-norms,
// excluding indices already selected. With k_hat == k this is exactly
// deim_select.
LdeimResult ldeim_detail(const DenseMatrix& u, Index k_hat);
IndexList ldeim_select(const DenseMatrix& u, Index k_hat);

struct QdeimResult {
  IndexList indices;
  std::vector<double> scores;  // pivot magnitudes
};

// Q-DEIM: column-pivoted QR on the transposed basis; the pivot columns are
// the selected indices of the basis rows.
QdeimResult qdeim_detail(const DenseMatrix& basis, Index k_sel);
IndexList qdeim_select(const DenseMatrix& basis, Index k_sel);
IndexList qdeim_select(const DenseMatrix& basis);  // k_sel = cols(basis)

// Leverage score of row i: squared 2-norm of row i of the orthonormal
// block v.
Vector leverage_scores(const DenseMatrix& v);

// Indices of the k_sel largest leverage scores, ordered by non-increasing
// score, ties toward the lowest index.
IndexList leverage_select(const DenseMatrix& v, Index k_sel);

// Runs one method over `basis` selecting k_sel indices and times the call.
// deim requires k_sel == cols(basis); ldeim reads k = cols(basis) and
// oversamples to k_sel; leverage uses all columns of `basis` as the score
// block regardless of k_sel.
SelectionReport select_with_report(Method method, const DenseMatrix& basis,
                                   Index k_sel);

}  // namespace curkit

#endif  // CURKIT_SELECTION_HPP
