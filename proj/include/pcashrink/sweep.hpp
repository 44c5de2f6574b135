#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcashrink/dataset.hpp"
#include "pcashrink/error.hpp"
#include "pcashrink/knn.hpp"
#include "pcashrink/shrinkage.hpp"

namespace pcashrink {

struct SweepRow {
  std::size_t m = 0;
  double eigsum = 0.0;
  double mean_shrinkage = 0.0;
  double median_shrinkage = 0.0;
  double max_shrinkage = 0.0;
  double accuracy = 0.0;
  /// Visited pairs breaking shrinkage >= -tol or shrinkage <= r + tol.
  std::size_t violations = 0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::string dataset_name;
  std::uint64_t seed = 0;
  std::string classifier_config;
  std::size_t samples = 0;
  std::size_t features = 0;
  std::size_t pair_count = 0;
  bool pairs_sampled = false;
};

struct SweepOptions {
  std::size_t m_first = 1;
  std::size_t m_last = 0;  // 0 selects n
  KnnConfig knn;
  std::size_t max_pairs = 2'000'000;
  unsigned threads = 0;
  double violation_tolerance = 1e-9;
};

/// Error raised inside a sweep step, tagged with the retained dimension.
class SweepError : public Error {
 public:
  SweepError(const Error& cause, std::size_t m);
  std::size_t m() const noexcept { return m_; }

 private:
  std::size_t m_;
};

/// Fits PCA once on the full feature matrix and, for every m in the range,
/// records the discarded eigenvalue sum, shrinkage statistics over all pairs
/// (or a seeded subsample above max_pairs) and k-NN accuracy on the
/// m-dimensional images. Rows come out in ascending m.
SweepResult run_sweep(const Dataset& dataset, const SweepOptions& options);

/// Pearson coefficients among sweep columns; a coefficient is empty when
/// one of its series is constant.
struct CorrelationSummary {
  std::optional<double> eigsum_shrinkage;
  std::optional<double> eigsum_accuracy;
  std::optional<double> shrinkage_accuracy;
  std::size_t sample_count = 0;
};

/// Throws insufficient-rows when the sweep has fewer than two rows.
CorrelationSummary correlate(const SweepResult& result);

}  // namespace pcashrink
