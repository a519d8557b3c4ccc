#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curkit/bench.hpp"

namespace curkit {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(
        start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

Index parse_positive(const std::string& tok, const std::string& what) {
  char* end = nullptr;
  const long long v = std::strtoll(tok.c_str(), &end, 10);
  if (end == tok.c_str() || *end != '\0' || v < 1) {
    throw std::invalid_argument(what + ": expected positive integer, got '" +
                                tok + "'");
  }
  return static_cast<Index>(v);
}

// "RxC:rank:noise", e.g. 500x120:20:0.05
SyntheticSpec parse_synthetic(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 3) {
    throw std::invalid_argument(
        "--synthetic: expected RxC:rank:noise, got '" + s + "'");
  }
  const auto dims = split(parts[0], 'x');
  if (dims.size() != 2) {
    throw std::invalid_argument("--synthetic: expected RxC dimensions, got '" +
                                parts[0] + "'");
  }
  SyntheticSpec spec;
  spec.rows = parse_positive(dims[0], "--synthetic rows");
  spec.cols = parse_positive(dims[1], "--synthetic cols");
  spec.true_rank = parse_positive(parts[1], "--synthetic rank");
  char* end = nullptr;
  spec.noise_level = std::strtod(parts[2].c_str(), &end);
  if (end == parts[2].c_str() || *end != '\0' || spec.noise_level < 0.0) {
    throw std::invalid_argument("--synthetic: bad noise level '" + parts[2] +
                                "'");
  }
  return spec;
}

void parse_ranks(const std::string& s, ExperimentConfig& cfg) {
  const auto parts = split(s, ':');
  if (parts.size() != 3) {
    throw std::invalid_argument("--ranks: expected min:max:step, got '" + s +
                                "'");
  }
  cfg.rank_min = parse_positive(parts[0], "--ranks min");
  cfg.rank_max = parse_positive(parts[1], "--ranks max");
  cfg.rank_step = parse_positive(parts[2], "--ranks step");
}

void parse_rank_rule(const std::string& s, ExperimentConfig& cfg) {
  if (s == "half") {
    cfg.rank_rule = SvdRankRule::half;
    return;
  }
  if (s.rfind("fixed=", 0) == 0) {
    cfg.rank_rule = SvdRankRule::fixed;
    cfg.fixed_svd_rank = parse_positive(s.substr(6), "--svd-rank-rule fixed");
    return;
  }
  throw std::invalid_argument(
      "--svd-rank-rule: expected 'half' or 'fixed=<k>', got '" + s + "'");
}

PreprocessKind parse_preprocess(const std::string& s) {
  if (s == "none") return PreprocessKind::none;
  if (s == "row-unit") return PreprocessKind::row_unit_norm;
  if (s == "row-center") return PreprocessKind::row_center;
  if (s == "col-center") return PreprocessKind::col_center;
  throw std::invalid_argument("--preprocess: unknown recipe '" + s + "'");
}

MatrixFormat parse_format(const std::string& flag, const std::string& path) {
  if (flag == "mtx") return MatrixFormat::matrix_market;
  if (flag == "csv") return MatrixFormat::csv;
  if (!flag.empty()) {
    throw std::invalid_argument("--format: expected mtx or csv, got '" + flag +
                                "'");
  }
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
    return MatrixFormat::csv;
  }
  if ((path.size() >= 4 && path.substr(path.size() - 4) == ".mtx") ||
      (path.size() >= 3 && path.substr(path.size() - 3) == ".mm")) {
    return MatrixFormat::matrix_market;
  }
  throw std::invalid_argument(
      "cannot infer input format from '" + path + "'; pass --format mtx|csv");
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{
      "curbench - CUR decomposition benchmark over DEIM, L-DEIM, Q-DEIM and "
      "leverage-score index selection"};

  std::string input_path;
  std::string synthetic_arg;
  std::string format_arg;
  std::string preprocess_arg = "none";
  std::string methods_arg = "deim,ldeim,qdeim,leverage";
  std::string ranks_arg = "1:50:1";
  std::string rank_rule_arg = "half";
  Index leverage_rank = 2;
  int repeats = 5;
  std::uint64_t seed = 0;
  bool with_bound = false;
  std::string out_path;

  auto* input_opt =
      app.add_option("--input", input_path, "Input matrix file to load");
  auto* synth_opt = app.add_option(
      "--synthetic", synthetic_arg,
      "Generate a seeded synthetic matrix, RxC:rank:noise (e.g. "
      "500x120:20:0.05)");
  input_opt->excludes(synth_opt);
  synth_opt->excludes(input_opt);
  app.add_option("--format", format_arg,
                 "Input format: mtx or csv (default: infer from extension)");
  app.add_option("--preprocess", preprocess_arg,
                 "Preprocessing recipe: none, row-unit, row-center, "
                 "col-center (default none)");
  app.add_option("--methods", methods_arg,
                 "Comma list from deim,ldeim,qdeim,leverage (default all)");
  app.add_option("--ranks", ranks_arg,
                 "Rank sweep min:max:step (default 1:50:1)");
  app.add_option("--svd-rank-rule", rank_rule_arg,
                 "Singular vectors for L-DEIM: half (k = ceil(k_hat/2)) or "
                 "fixed=<k> (default half)");
  app.add_option("--leverage-rank", leverage_rank,
                 "Singular vectors for leverage scores (default 2)");
  app.add_option("--repeats", repeats,
                 "Timing repeats per sweep point, median reported (default 5)");
  app.add_option("--seed", seed, "Seed for synthetic generation (default 0)");
  app.add_flag("--bound", with_bound,
               "Also compute the error-bound diagnostic column");
  app.add_option("--out", out_path, "Output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    ExperimentConfig cfg;
    if (!synthetic_arg.empty()) {
      cfg.synthetic = parse_synthetic(synthetic_arg);
    } else if (!input_path.empty()) {
      cfg.input_path = input_path;
      cfg.format = parse_format(format_arg, input_path);
    } else {
      throw std::invalid_argument("one of --input or --synthetic is required");
    }
    cfg.preprocess.kind = parse_preprocess(preprocess_arg);
    for (const std::string& name : split(methods_arg, ',')) {
      cfg.methods.push_back(method_from_name(name));
    }
    parse_ranks(ranks_arg, cfg);
    parse_rank_rule(rank_rule_arg, cfg);
    if (leverage_rank < 1) {
      throw std::invalid_argument("--leverage-rank must be >= 1");
    }
    cfg.leverage_rank = leverage_rank;
    if (repeats < 1) {
      throw std::invalid_argument("--repeats must be >= 1");
    }
    cfg.repeats = repeats;
    cfg.seed = seed;
    cfg.with_bound = with_bound;

    const std::vector<ResultRow> rows = run_experiment(cfg, &std::cerr);
    emit_csv(rows, out_path);
    std::cout << "wrote " << rows.size() << " rows to " << out_path << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "curbench: error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace curkit
