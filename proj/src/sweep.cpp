#include "pcashrink/sweep.hpp"

#include "pcashrink/error.hpp"

namespace pcashrink {

SweepError::SweepError(const Error& cause, std::size_t m)
    : Error(cause.code(), "at m=" + std::to_string(m) + ": " + cause.what()), m_(m) {}

SweepResult run_sweep(const Dataset& dataset, const SweepOptions& options) {
  const std::size_t n = dataset.dim();
  if (dataset.size() == 0 || n == 0) throw Error(ErrorCode::EmptyData, "sweep on empty dataset");
  if (dataset.labels.size() != dataset.size()) {
    throw Error(ErrorCode::DimMismatch, "label count differs from sample count");
  }
  const std::size_t m_last = options.m_last == 0 ? n : options.m_last;
  if (options.m_first < 1 || m_last > n || options.m_first > m_last) {
    throw Error(ErrorCode::DimMismatch, "m range " + std::to_string(options.m_first) + ".." +
                                            std::to_string(m_last) + " not within [1, " +
                                            std::to_string(n) + "]");
  }

  const PcaModel model = fit(dataset.features);

  SweepResult result;
  result.dataset_name = dataset.name;
  result.seed = options.knn.seed;
  result.classifier_config = options.knn.describe();
  result.samples = dataset.size();
  result.features = n;

  StatsOptions stats_options;
  stats_options.sampling = {options.max_pairs, options.knn.seed};
  stats_options.threads = options.threads;
  stats_options.violation_tolerance = options.violation_tolerance;

  KnnConfig knn = options.knn;
  knn.threads = options.threads;

  for (std::size_t m = options.m_first; m <= m_last; ++m) {
    try {
      const RetainedDims dims(m);
      const ShrinkageStats stats = shrinkage_stats(model, dataset.features, dims, stats_options);
      SweepRow row;
      row.m = m;
      row.eigsum = discarded_eigenvalue_sum(model, dims);
      row.mean_shrinkage = stats.mean;
      row.median_shrinkage = stats.median;
      row.max_shrinkage = stats.max;
      row.violations = stats.negative_violations + stats.bound_violations;
      row.accuracy = knn_accuracy(transform_rows(model, dataset.features, dims), dataset.labels, knn);
      result.rows.push_back(row);
      result.pair_count = stats.pair_count;
      result.pairs_sampled = stats.sampled;
    } catch (const Error& e) {
      throw SweepError(e, m);
    }
  }
  return result;
}

CorrelationSummary correlate(const SweepResult& result) {
  if (result.rows.size() < 2) {
    throw Error(ErrorCode::InsufficientRows, "correlation needs at least two sweep rows");
  }
  Vec eigsum;
  Vec shrink;
  Vec accuracy;
  for (const auto& row : result.rows) {
    eigsum.push_back(row.eigsum);
    shrink.push_back(row.mean_shrinkage);
    accuracy.push_back(row.accuracy);
  }
  auto coefficient = [](const Vec& xs, const Vec& ys) -> std::optional<double> {
    try {
      return pearson(xs, ys);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ZeroVariance) return std::nullopt;
      throw;
    }
  };
  CorrelationSummary summary;
  summary.eigsum_shrinkage = coefficient(eigsum, shrink);
  summary.eigsum_accuracy = coefficient(eigsum, accuracy);
  summary.shrinkage_accuracy = coefficient(shrink, accuracy);
  summary.sample_count = result.rows.size();
  return summary;
}

}  // namespace pcashrink
