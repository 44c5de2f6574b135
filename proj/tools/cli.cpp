#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pcashrink/dataset.hpp"
#include "pcashrink/error.hpp"
#include "pcashrink/pca.hpp"
#include "pcashrink/report.hpp"
#include "pcashrink/serialize.hpp"
#include "pcashrink/shrinkage.hpp"
#include "pcashrink/sweep.hpp"

namespace pcashrink::cli {

namespace {

struct MRange {
  std::size_t first = 0;
  std::size_t last = 0;
};

struct RunConfig {
  std::string command;
  std::string input_path;
  std::string label_column = "last";
  bool header = false;
  std::string delimiter = ",";
  std::optional<std::size_t> m;
  std::optional<std::string> m_range;
  std::size_t k = 5;
  std::size_t folds = 5;
  std::uint64_t seed = 0;
  std::string output_path;
  std::string format = "csv";
  unsigned threads = 0;
  std::size_t pair_sample = 2'000'000;
  double violation_tol = 1e-9;
  std::string model_path;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

MRange parse_m_range(const std::string& text) {
  const auto sep = text.find("..");
  if (sep == std::string::npos) throw UsageError("--m-range expects A..B, got '" + text + "'");
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, sep);
    const std::string b = text.substr(sep + 2);
    MRange range;
    range.first = std::stoul(a, &used);
    if (used != a.size()) throw UsageError("bad --m-range start");
    range.last = std::stoul(b, &used);
    if (used != b.size()) throw UsageError("bad --m-range end");
    return range;
  } catch (const std::logic_error&) {
    throw UsageError("--m-range expects A..B, got '" + text + "'");
  }
}

char parse_delimiter(const std::string& text) {
  if (text == "tab" || text == "\\t") return '\t';
  if (text.size() != 1) throw UsageError("--delimiter must be a single character or 'tab'");
  return text[0];
}

Dataset load_input(const RunConfig& config) {
  CsvOptions options;
  options.label_column = parse_label_column(config.label_column);
  options.header = config.header;
  options.delimiter = parse_delimiter(config.delimiter);
  return load_csv(config.input_path, options);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  file << content;
  if (!file) throw Error(ErrorCode::Io, "failed writing '" + path + "'");
}

std::string join_reals(std::span<const double> values, const char* separator) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += separator;
    out += format_real(values[k]);
  }
  return out;
}

int cmd_fit(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Dataset data = load_input(config);
  const PcaModel model = fit(data.features);
  if (model.degenerate) err << "warning: model fitted from a single sample\n";

  const std::string text = serialize_model(model);
  if (config.output_path.empty()) {
    out << text;
    return kOk;
  }
  write_file(config.output_path, text);
  err << "wrote model to " << config.output_path << '\n';

  if (config.format == "json") {
    out << "{\"n\": " << model.dim() << ", \"N\": " << data.size() << ", \"eigenvalues\": ["
        << join_reals(model.eigenvalues, ", ") << "]}\n";
  } else {
    out << "n," << model.dim() << "\nN," << data.size() << "\neigenvalues,"
        << join_reals(model.eigenvalues, ",") << '\n';
  }
  return kOk;
}

int cmd_transform(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Dataset data = load_input(config);
  PcaModel model;
  if (config.model_path.empty()) {
    model = fit(data.features);
  } else {
    std::ifstream file(config.model_path, std::ios::binary);
    if (!file) throw Error(ErrorCode::Io, "cannot open model '" + config.model_path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    model = deserialize_model(buffer.str());
  }
  const RetainedDims dims(config.m.value_or(model.dim()));
  const Mat images = transform_rows(model, data.features, dims);

  std::ostringstream text;
  if (config.format == "json") {
    text << "{\"m\": " << dims.value() << ", \"rows\": [\n";
    for (std::size_t r = 0; r < images.rows(); ++r) {
      text << "  {\"label\": \"" << data.labels[r] << "\", \"y\": ["
           << join_reals(images.row(r), ", ") << "]}" << (r + 1 < images.rows() ? "," : "")
           << '\n';
    }
    text << "]}\n";
  } else {
    for (std::size_t k = 0; k < dims.value(); ++k) text << 'y' << k + 1 << ',';
    text << "label\n";
    for (std::size_t r = 0; r < images.rows(); ++r) {
      text << join_reals(images.row(r), ",") << ',' << data.labels[r] << '\n';
    }
  }
  if (config.output_path.empty()) {
    out << text.str();
  } else {
    write_file(config.output_path, text.str());
    err << "wrote " << images.rows() << " transformed rows to " << config.output_path << '\n';
  }
  return kOk;
}

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!config.m) throw UsageError("analyze requires --m");
  const Dataset data = load_input(config);
  const PcaModel model = fit(data.features);
  const RetainedDims dims(*config.m);
  model.check_dims(dims);

  const auto records =
      shrinkage_records(model, data.features, dims, {config.pair_sample, config.seed}, config.threads);
  const double tol = config.violation_tol;
  std::size_t negative = 0;
  std::size_t bound = 0;
  double max_shrinkage = records.empty() ? 0.0 : records.front().shrinkage;
  for (const auto& rec : records) {
    negative += rec.shrinkage < -tol;
    bound += rec.shrinkage > rec.reconstruction_error + tol;
    max_shrinkage = std::max(max_shrinkage, rec.shrinkage);
  }

  std::size_t witness_violations = 0;
  std::string witness_summary;
  double witness_image_distance = 0.0;
  if (dims.value() == model.dim()) {
    witness_summary = "injective at full rank";
  } else {
    const auto x = data.features.row(0);
    const Vec witness = collision_witness(model, x, dims, 1.0);
    witness_image_distance =
        euclidean_distance(transform(model, witness, dims), transform(model, x, dims));
    witness_violations = witness_image_distance > 1e-9;
    witness_summary = "x=[" + join_reals(x, " ") + "] x'=[" + join_reals(witness, " ") + "]";
  }

  if (!config.output_path.empty()) {
    write_file(config.output_path, records_csv(records));
    err << "wrote " << records.size() << " pair records to " << config.output_path << '\n';
  }

  const std::size_t violations = negative + bound + witness_violations;
  if (config.format == "json") {
    out << "{\"n\": " << model.dim() << ", \"m\": " << dims.value()
        << ", \"pairs\": " << records.size() << ", \"max_shrinkage\": " << format_real(max_shrinkage)
        << ", \"shrinkage_violations\": " << negative << ", \"bound_violations\": " << bound
        << ", \"witness\": \"" << witness_summary << "\""
        << ", \"witness_image_distance\": " << format_real(witness_image_distance)
        << ", \"violations\": " << violations << "}\n";
  } else {
    out << "n," << model.dim() << "\nm," << dims.value() << "\npairs," << records.size()
        << "\nmax_shrinkage," << format_real(max_shrinkage) << "\nshrinkage_violations,"
        << negative << "\nbound_violations," << bound << "\nwitness," << witness_summary
        << "\nwitness_image_distance," << format_real(witness_image_distance) << "\nviolations,"
        << violations << '\n';
  }
  if (violations > 0) {
    err << "error: code=violation " << violations << " theorem checks failed at tolerance "
        << format_real(tol) << '\n';
    return kViolation;
  }
  return kOk;
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.m) throw UsageError("sweep takes --m-range, not --m");
  if (config.output_path.empty()) throw UsageError("sweep requires --output PREFIX");
  const Dataset data = load_input(config);

  SweepOptions options;
  if (config.m_range) {
    const MRange range = parse_m_range(*config.m_range);
    options.m_first = range.first;
    options.m_last = range.last;
    if (range.last == 0) throw UsageError("--m-range end must be positive");
  }
  options.knn.k = config.k;
  options.knn.folds = config.folds;
  options.knn.seed = config.seed;
  options.max_pairs = config.pair_sample;
  options.threads = config.threads;
  options.violation_tolerance = config.violation_tol;

  const SweepResult result = run_sweep(data, options);
  const CorrelationSummary summary = correlate(result);
  if (result.pairs_sampled) {
    err << "note: shrinkage statistics use a seeded subsample of " << result.pair_count
        << " pairs\n";
  }

  write_file(config.output_path + ".csv", sweep_csv(result));
  const std::string report = sweep_report_json(result, summary);
  write_file(config.output_path + ".json", report);
  err << "wrote " << config.output_path << ".csv and " << config.output_path << ".json\n";

  auto show = [](const std::optional<double>& v) { return v ? format_real(*v) : std::string("absent"); };
  if (config.format == "json") {
    out << report;
  } else {
    out << "r_eigsum_shrinkage," << show(summary.eigsum_shrinkage) << "\nr_eigsum_accuracy,"
        << show(summary.eigsum_accuracy) << "\nr_shrinkage_accuracy,"
        << show(summary.shrinkage_accuracy) << "\nrows," << summary.sample_count << '\n';
  }

  std::size_t violations = 0;
  for (const auto& row : result.rows) violations += row.violations;
  if (violations > 0) {
    err << "error: code=violation " << violations << " pair checks failed during sweep\n";
    return kViolation;
  }
  return kOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Io:
    case ErrorCode::Parse:
      return kIoParse;
    default:
      return kNumeric;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"PCA distance-shrinkage analysis toolkit", "pca-shrink"};
  app.set_config("--config", "", "TOML/INI file with option defaults (flags win)");
  app.require_subcommand(1);

  app.add_option("--input", config.input_path, "Delimited input file");
  app.add_option("--label-column", config.label_column,
                 "Label column: index (negative from end), 'last' or header name");
  app.add_flag("--header", config.header, "First non-empty line is a header");
  app.add_option("--delimiter", config.delimiter, "Field delimiter (single char or 'tab')");
  auto* m_opt = app.add_option("--m", config.m, "Retained dimension");
  auto* range_opt = app.add_option("--m-range", config.m_range, "Retained dimension range A..B");
  m_opt->excludes(range_opt);
  app.add_option("--k", config.k, "Neighbours for k-NN")->check(CLI::PositiveNumber);
  app.add_option("--folds", config.folds, "Cross-validation folds");
  app.add_option("--seed", config.seed, "Random seed")->envname("PCA_SHRINK_SEED");
  app.add_option("--output", config.output_path, "Output path (prefix for sweep)");
  app.add_option("--format", config.format, "Standard output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", config.threads, "Worker cap (0 = available parallelism)");
  app.add_option("--pair-sample", config.pair_sample, "Max pairs before subsampling")
      ->check(CLI::PositiveNumber);
  app.add_option("--violation-tol", config.violation_tol, "Tolerance for theorem checks");
  app.add_option("--model", config.model_path, "Model file (transform)");

  for (const char* name : {"fit", "transform", "analyze", "sweep"}) {
    static const std::map<std::string, std::string> help{
        {"fit", "Fit PCA and write the model"},
        {"transform", "Project samples onto the leading components"},
        {"analyze", "Per-pair shrinkage and theorem checks at one m"},
        {"sweep", "Sweep m, record eigenvalue sums, shrinkage and accuracy"}};
    auto* sub = app.add_subcommand(name, help.at(name));
    sub->fallthrough();
    sub->callback([&config, name] { config.command = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: code=usage " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (config.input_path.empty()) throw UsageError("--input is required");
    if (config.command == "fit") return cmd_fit(config, out, err);
    if (config.command == "transform") return cmd_transform(config, out, err);
    if (config.command == "analyze") return cmd_analyze(config, out, err);
    return cmd_sweep(config, out, err);
  } catch (const UsageError& e) {
    err << "error: code=usage " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: code=" << e.code_name() << ' ' << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace pcashrink::cli
