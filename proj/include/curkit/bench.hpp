#ifndef CURKIT_BENCH_HPP
#define CURKIT_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "curkit/matrix_io.hpp"
#include "curkit/selection.hpp"
#include "curkit/types.hpp"

namespace curkit {

// How many singular vectors L-DEIM gets at sweep rank k_hat: half means
// k = ceil(k_hat / 2), fixed means a constant k for every sweep point.
enum class SvdRankRule { half, fixed };

struct ExperimentConfig {
  std::optional<std::string> input_path;
  MatrixFormat format = MatrixFormat::matrix_market;
  std::optional<SyntheticSpec> synthetic;
  PreprocessSpec preprocess;
  std::vector<Method> methods;
  Index rank_min = 1;
  Index rank_max = 50;
  Index rank_step = 1;
  SvdRankRule rank_rule = SvdRankRule::half;
  Index fixed_svd_rank = 0;  // used when rank_rule == fixed
  Index leverage_rank = 2;
  int repeats = 5;
  std::uint64_t seed = 0;
  bool with_bound = false;
};

// One sweep point of one method. selection_seconds is the median over the
// configured repeats of the combined row+column selection time; a NaN
// rel_error marks a diagnostic row for a sweep point that failed.
struct ResultRow {
  Method method = Method::deim;
  Index k_hat = 0;
  Index svd_rank_used = 0;
  double rel_error = 0.0;
  double selection_seconds = 0.0;
  std::optional<double> bound_value;
};

// Field-wise equality with NaN == NaN, for round-trip checks.
bool rows_equivalent(const ResultRow& a, const ResultRow& b);

// Runs the full sweep: for each k_hat and method, computes the needed
// singular vectors, times the index selection (median of repeats, both
// sides, SVD excluded), builds the CUR factors, and evaluates the relative
// error and (optionally) the bound diagnostic. A failing sweep point is
// reported on `diagnostics` and becomes a NaN row; the sweep continues.
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg,
                                      std::ostream* diagnostics = nullptr);

inline constexpr const char* kResultCsvHeader =
    "method,k_hat,svd_rank_used,rel_error,selection_seconds,bound_value";

// Writes rows as CSV: pinned header, reals with 17 significant digits,
// absent bound as an empty field.
void emit_csv(const std::vector<ResultRow>& rows, const std::string& path);

std::vector<ResultRow> parse_result_csv(const std::string& path);

int cli_main(int argc, char** argv);

}  // namespace curkit

#endif  // CURKIT_BENCH_HPP
