#include "curkit/bench.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "curkit/cur.hpp"
#include "curkit/linalg.hpp"

namespace curkit {

namespace {

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

double parse_real_field(const std::string& field, const std::string& context) {
  char* end = nullptr;
  const double value = std::strtod(field.c_str(), &end);
  if (end == field.c_str() || *end != '\0') {
    throw std::runtime_error(context + ": cannot parse real '" + field + "'");
  }
  return value;
}

Index parse_count_field(const std::string& field, const std::string& context) {
  char* end = nullptr;
  const long long value = std::strtoll(field.c_str(), &end, 10);
  if (end == field.c_str() || *end != '\0' || value < 0) {
    throw std::runtime_error(context + ": cannot parse count '" + field + "'");
  }
  return static_cast<Index>(value);
}

bool same_real(double a, double b) {
  if (std::isnan(a) && std::isnan(b)) return true;
  return a == b;
}

Index svd_rank_for(const ExperimentConfig& cfg, Method method, Index k_hat) {
  switch (method) {
    case Method::deim:
    case Method::qdeim:
      return k_hat;
    case Method::ldeim:
      return cfg.rank_rule == SvdRankRule::half ? (k_hat + 1) / 2
                                                : cfg.fixed_svd_rank;
    case Method::leverage:
      return cfg.leverage_rank;
  }
  throw std::invalid_argument("svd_rank_for: unknown method");
}

DenseMatrix resolve_input(const ExperimentConfig& cfg) {
  if (cfg.synthetic && cfg.input_path) {
    throw std::invalid_argument(
        "run_experiment: give either an input path or a synthetic spec, not "
        "both");
  }
  if (cfg.synthetic) {
    SyntheticSpec spec = *cfg.synthetic;
    spec.seed = cfg.seed;
    return synthesize(spec);
  }
  if (cfg.input_path) {
    return load_matrix(*cfg.input_path, cfg.format);
  }
  throw std::invalid_argument("run_experiment: no input configured");
}

void validate_config(const ExperimentConfig& cfg, Index min_dim) {
  if (cfg.methods.empty()) {
    throw std::invalid_argument("run_experiment: no methods selected");
  }
  if (cfg.rank_min < 1 || cfg.rank_min > cfg.rank_max ||
      cfg.rank_max > min_dim) {
    throw std::invalid_argument(
        "run_experiment: rank sweep must satisfy 1 <= min <= max <= " +
        std::to_string(min_dim));
  }
  if (cfg.rank_step < 1) {
    throw std::invalid_argument("run_experiment: rank step must be >= 1");
  }
  if (cfg.repeats < 1) {
    throw std::invalid_argument("run_experiment: repeats must be >= 1");
  }
  const bool wants_ldeim =
      std::find(cfg.methods.begin(), cfg.methods.end(), Method::ldeim) !=
      cfg.methods.end();
  if (wants_ldeim && cfg.rank_rule == SvdRankRule::fixed &&
      (cfg.fixed_svd_rank < 1 || cfg.fixed_svd_rank > cfg.rank_min)) {
    throw std::invalid_argument(
        "run_experiment: fixed svd rank k must satisfy 1 <= k <= every sweep "
        "rank (smallest is " +
        std::to_string(cfg.rank_min) + ")");
  }
  const bool wants_leverage =
      std::find(cfg.methods.begin(), cfg.methods.end(), Method::leverage) !=
      cfg.methods.end();
  if (wants_leverage &&
      (cfg.leverage_rank < 1 || cfg.leverage_rank > min_dim)) {
    throw std::invalid_argument(
        "run_experiment: leverage rank out of range [1, " +
        std::to_string(min_dim) + "]");
  }
}

}  // namespace

bool rows_equivalent(const ResultRow& a, const ResultRow& b) {
  if (a.method != b.method || a.k_hat != b.k_hat ||
      a.svd_rank_used != b.svd_rank_used) {
    return false;
  }
  if (!same_real(a.rel_error, b.rel_error)) return false;
  if (!same_real(a.selection_seconds, b.selection_seconds)) return false;
  if (a.bound_value.has_value() != b.bound_value.has_value()) return false;
  if (a.bound_value && !same_real(*a.bound_value, *b.bound_value)) return false;
  return true;
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg,
                                      std::ostream* diagnostics) {
  const DenseMatrix a = preprocess(resolve_input(cfg), cfg.preprocess);
  const Index min_dim = std::min(a.rows(), a.cols());
  validate_config(cfg, min_dim);

  // Singular vectors are shared across methods and sweep points; the cache
  // keeps the selection timing free of SVD work by construction.
  std::map<Index, TruncatedSvd> svd_cache;
  const auto svd_at = [&](Index rank) -> const TruncatedSvd& {
    auto it = svd_cache.find(rank);
    if (it == svd_cache.end()) {
      it = svd_cache.emplace(rank, truncated_svd(a, rank)).first;
    }
    return it->second;
  };

  std::vector<ResultRow> rows;
  for (Index k_hat = cfg.rank_min; k_hat <= cfg.rank_max;
       k_hat += cfg.rank_step) {
    for (Method method : cfg.methods) {
      ResultRow row;
      row.method = method;
      row.k_hat = k_hat;
      row.svd_rank_used = svd_rank_for(cfg, method, k_hat);
      try {
        const TruncatedSvd& svd = svd_at(row.svd_rank_used);

        std::vector<double> times;
        times.reserve(static_cast<std::size_t>(cfg.repeats));
        IndexList row_indices;
        IndexList col_indices;
        for (int rep = 0; rep < cfg.repeats; ++rep) {
          SelectionReport rows_rep = select_with_report(method, svd.u, k_hat);
          SelectionReport cols_rep = select_with_report(method, svd.v, k_hat);
          times.push_back(rows_rep.selection_seconds +
                          cols_rep.selection_seconds);
          row_indices = std::move(rows_rep.indices);
          col_indices = std::move(cols_rep.indices);
        }
        row.selection_seconds = median(std::move(times));

        const CurFactors f = build_cur(a, col_indices, row_indices);
        row.rel_error = relative_error(a, f);

        if (cfg.with_bound) {
          const double sigma_next =
              row.svd_rank_used + 1 <= min_dim
                  ? svd_at(row.svd_rank_used + 1).sigma(row.svd_rank_used)
                  : 0.0;
          row.bound_value = bound_diagnostic(a, svd, f, sigma_next).bound_value;
        }
      } catch (const std::exception& e) {
        if (diagnostics) {
          *diagnostics << "curbench: " << method_name(method)
                       << " at k_hat=" << k_hat << ": " << e.what() << "\n";
        }
        row.rel_error = std::numeric_limits<double>::quiet_NaN();
        row.selection_seconds = 0.0;
        row.bound_value.reset();
      }
      rows.push_back(std::move(row));
    }
  }

  std::stable_sort(rows.begin(), rows.end(),
                   [](const ResultRow& x, const ResultRow& y) {
                     if (x.k_hat != y.k_hat) return x.k_hat < y.k_hat;
                     return static_cast<int>(x.method) <
                            static_cast<int>(y.method);
                   });
  return rows;
}

void emit_csv(const std::vector<ResultRow>& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("emit_csv: cannot open '" + path +
                             "' for writing");
  }
  out << kResultCsvHeader << "\n";
  for (const ResultRow& row : rows) {
    out << method_name(row.method) << "," << row.k_hat << ","
        << row.svd_rank_used << "," << format_real(row.rel_error) << ","
        << format_real(row.selection_seconds) << ",";
    if (row.bound_value) out << format_real(*row.bound_value);
    out << "\n";
  }
  if (!out.good()) {
    throw std::runtime_error("emit_csv: I/O failure writing '" + path + "'");
  }
}

std::vector<ResultRow> parse_result_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("parse_result_csv: cannot open '" + path + "'");
  }
  const std::string context = "parse_result_csv('" + path + "')";
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error(context + ": empty file");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kResultCsvHeader) {
    throw std::runtime_error(context + ": unexpected header '" + line + "'");
  }

  std::vector<ResultRow> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(
          start,
          comma == std::string::npos ? std::string::npos : comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 6) {
      throw std::runtime_error(context + ": expected 6 fields, found " +
                               std::to_string(fields.size()));
    }
    ResultRow row;
    row.method = method_from_name(fields[0]);
    row.k_hat = parse_count_field(fields[1], context);
    row.svd_rank_used = parse_count_field(fields[2], context);
    row.rel_error = parse_real_field(fields[3], context);
    row.selection_seconds = parse_real_field(fields[4], context);
    if (!fields[5].empty()) {
      row.bound_value = parse_real_field(fields[5], context);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace curkit
