#include "curkit/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace curkit {

namespace {

// Guard against coordinate headers that would densify into absurd buffers.
constexpr Index kMaxDenseEntries = 200'000'000;

[[noreturn]] void fail(const std::string& context, const std::string& msg) {
  throw std::runtime_error(context + ": " + msg);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

// Strict real parser: the token must be a complete number.
double parse_real(const std::string& token, const std::string& context) {
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(token.c_str(), &end);
  if (end == token.c_str() || *end != '\0') {
    fail(context, "cannot parse real value '" + token + "'");
  }
  return value;
}

Index parse_count(const std::string& token, const std::string& context) {
  errno = 0;
  char* end = nullptr;
  const long long value = std::strtoll(token.c_str(), &end, 10);
  if (end == token.c_str() || *end != '\0' || errno == ERANGE || value < 0) {
    fail(context, "cannot parse count '" + token + "'");
  }
  return static_cast<Index>(value);
}

void check_dims(Index rows, Index cols, const std::string& context) {
  if (rows < 1 || cols < 1) {
    fail(context, "matrix dimensions must be at least 1x1");
  }
  if (rows > kMaxDenseEntries / cols) {
    fail(context, "dimension overflow: " + std::to_string(rows) + "x" +
                      std::to_string(cols) + " exceeds dense capacity");
  }
}

void check_finite(const DenseMatrix& a, const std::string& context) {
  if (!all_finite(a)) {
    fail(context, "non-finite entry in matrix");
  }
}

std::string next_token(std::istream& in) {
  std::string tok;
  in >> tok;
  return tok;
}

DenseMatrix load_matrix_market(std::istream& in, const std::string& context) {
  std::string banner, object, layout, field, symmetry;
  in >> banner >> object >> layout >> field >> symmetry;
  if (banner != "%%MatrixMarket") {
    fail(context, "missing %%MatrixMarket banner");
  }
  object = lower(object);
  layout = lower(layout);
  field = lower(field);
  symmetry = lower(symmetry);
  if (object != "matrix") {
    fail(context, "unsupported object '" + object + "' (expected matrix)");
  }
  if (layout != "coordinate" && layout != "array") {
    fail(context, "unsupported layout '" + layout + "'");
  }
  if (field != "real") {
    fail(context, "unsupported field '" + field + "' (only real supported)");
  }
  if (symmetry != "general") {
    fail(context,
         "unsupported symmetry '" + symmetry + "' (only general supported)");
  }
  in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');

  // Comment lines are allowed between the banner and the size line.
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto pos = line.find_first_not_of(" \t");
    if (pos == std::string::npos) continue;
    if (line[pos] == '%') continue;
    break;
  }
  if (in.fail() && line.empty()) {
    fail(context, "missing size line");
  }

  std::istringstream size_line(line);
  std::string tok_rows, tok_cols, tok_nnz;
  size_line >> tok_rows >> tok_cols;
  const Index rows = parse_count(tok_rows, context);
  const Index cols = parse_count(tok_cols, context);
  check_dims(rows, cols, context);

  if (layout == "coordinate") {
    size_line >> tok_nnz;
    const Index nnz = parse_count(tok_nnz, context);
    DenseMatrix a = DenseMatrix::Zero(rows, cols);
    for (Index e = 0; e < nnz; ++e) {
      const std::string ti = next_token(in);
      const std::string tj = next_token(in);
      const std::string tv = next_token(in);
      if (tv.empty()) {
        fail(context, "expected " + std::to_string(nnz) +
                          " coordinate entries, found " + std::to_string(e));
      }
      const Index i = parse_count(ti, context);
      const Index j = parse_count(tj, context);
      if (i < 1 || i > rows || j < 1 || j > cols) {
        fail(context, "coordinate (" + ti + ", " + tj + ") out of range");
      }
      a(i - 1, j - 1) = parse_real(tv, context);
    }
    if (!next_token(in).empty()) {
      fail(context, "trailing data after declared entries");
    }
    check_finite(a, context);
    return a;
  }

  // Array layout stores entries in column-major order.
  DenseMatrix a(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const std::string tv = next_token(in);
      if (tv.empty()) {
        fail(context, "array data ended early at column " + std::to_string(j));
      }
      a(i, j) = parse_real(tv, context);
    }
  }
  if (!next_token(in).empty()) {
    fail(context, "trailing data after declared entries");
  }
  check_finite(a, context);
  return a;
}

DenseMatrix load_csv(std::istream& in, const std::string& context) {
  std::vector<std::vector<double>> rows;
  std::string line;
  Index line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() && in.peek() == EOF) break;  // trailing newline
    std::vector<double> row;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      const std::string field = line.substr(
          start, comma == std::string::npos ? std::string::npos
                                            : comma - start);
      row.push_back(parse_real(
          field, context + " (line " + std::to_string(line_no) + ")"));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      fail(context, "inconsistent row length at line " +
                        std::to_string(line_no) + " (" +
                        std::to_string(row.size()) + " vs " +
                        std::to_string(rows.front().size()) + ")");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    fail(context, "empty file");
  }
  const Index m = static_cast<Index>(rows.size());
  const Index n = static_cast<Index>(rows.front().size());
  check_dims(m, n, context);
  DenseMatrix a(m, n);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) {
      a(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  check_finite(a, context);
  return a;
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// Box-Muller over mt19937_64, so a seed yields the same stream on every
// platform (std::normal_distribution leaves the algorithm unspecified).
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : engine_(seed) {}

  double operator()() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = unit_interval();
    } while (u1 <= 0.0);
    const double u2 = unit_interval();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  double unit_interval() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;  // [0, 1)
  }

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

DenseMatrix sample_gaussian(GaussianSampler& g, Index rows, Index cols) {
  DenseMatrix a(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      a(i, j) = g();
    }
  }
  return a;
}

}  // namespace

DenseMatrix load_matrix(const std::string& path, MatrixFormat format) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("load_matrix: cannot open '" + path + "'");
  }
  const std::string context = "load_matrix('" + path + "')";
  return format == MatrixFormat::matrix_market ? load_matrix_market(in, context)
                                               : load_csv(in, context);
}

void write_matrix(const DenseMatrix& a, const std::string& path,
                  MatrixFormat format) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("write_matrix: cannot open '" + path +
                             "' for writing");
  }
  if (format == MatrixFormat::matrix_market) {
    out << "%%MatrixMarket matrix array real general\n";
    out << a.rows() << " " << a.cols() << "\n";
    for (Index j = 0; j < a.cols(); ++j) {
      for (Index i = 0; i < a.rows(); ++i) {
        out << format_real(a(i, j)) << "\n";
      }
    }
  } else {
    for (Index i = 0; i < a.rows(); ++i) {
      for (Index j = 0; j < a.cols(); ++j) {
        if (j > 0) out << ",";
        out << format_real(a(i, j));
      }
      out << "\n";
    }
  }
  if (!out.good()) {
    throw std::runtime_error("write_matrix: I/O failure writing '" + path +
                             "'");
  }
}

DenseMatrix preprocess(const DenseMatrix& a, const PreprocessSpec& spec) {
  switch (spec.kind) {
    case PreprocessKind::none:
      return a;
    case PreprocessKind::row_unit_norm: {
      DenseMatrix out = a;
      for (Index i = 0; i < out.rows(); ++i) {
        const double nrm = out.row(i).norm();
        if (nrm > 0.0) out.row(i) /= nrm;
      }
      return out;
    }
    case PreprocessKind::row_center: {
      DenseMatrix out = a;
      out.colwise() -= out.rowwise().mean();
      return out;
    }
    case PreprocessKind::col_center: {
      DenseMatrix out = a;
      out.rowwise() -= out.colwise().mean();
      return out;
    }
  }
  throw std::invalid_argument("preprocess: unknown kind");
}

DenseMatrix synthesize(const SyntheticSpec& spec) {
  if (spec.rows < 1 || spec.cols < 1) {
    throw std::invalid_argument("synthesize: rows and cols must be >= 1");
  }
  if (spec.true_rank < 0 || spec.true_rank > std::min(spec.rows, spec.cols)) {
    throw std::invalid_argument(
        "synthesize: true_rank must be in [0, min(rows, cols)]");
  }
  if (!(spec.noise_level >= 0.0)) {
    throw std::invalid_argument("synthesize: noise_level must be >= 0");
  }
  GaussianSampler g(spec.seed);
  const DenseMatrix x = sample_gaussian(g, spec.rows, spec.true_rank);
  const DenseMatrix y = sample_gaussian(g, spec.cols, spec.true_rank);
  DenseMatrix a = x * y.transpose();
  if (spec.noise_level > 0.0) {
    a += spec.noise_level * sample_gaussian(g, spec.rows, spec.cols);
  }
  return a;
}

}  // namespace curkit
