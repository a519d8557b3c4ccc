#ifndef CURKIT_MATRIX_IO_HPP
#define CURKIT_MATRIX_IO_HPP

#include <cstdint>
#include <string>

#include "curkit/types.hpp"

namespace curkit {

enum class MatrixFormat { matrix_market, csv };

enum class PreprocessKind { none, row_unit_norm, row_center, col_center };

struct PreprocessSpec {
  PreprocessKind kind = PreprocessKind::none;
};

// Seeded low-rank test matrix X*Y^T + noise_level*N, all factors with
// independent standard-normal entries. Identical seed, identical matrix.
struct SyntheticSpec {
  Index rows = 0;
  Index cols = 0;
  Index true_rank = 0;
  double noise_level = 0.0;
  std::uint64_t seed = 0;
};

// Reads a dense matrix from a Matrix Market file (`coordinate real general`
// or `array real general`, 1-based indices densified to 0-based) or from a
// headerless CSV of reals. Throws std::runtime_error on malformed input,
// dimension overflow, or non-finite entries.
DenseMatrix load_matrix(const std::string& path, MatrixFormat format);

void write_matrix(const DenseMatrix& a, const std::string& path,
                  MatrixFormat format);

// Applies exactly one preprocessing recipe. Zero rows pass through
// unchanged under row_unit_norm.
DenseMatrix preprocess(const DenseMatrix& a, const PreprocessSpec& spec);

DenseMatrix synthesize(const SyntheticSpec& spec);

}  // namespace curkit

#endif  // CURKIT_MATRIX_IO_HPP
