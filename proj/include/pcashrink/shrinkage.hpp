#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pcashrink/pca.hpp"

namespace pcashrink {

/// Distance distortion for one sample pair under a truncated transform.
struct ShrinkageRecord {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t m = 0;
  double dist_original = 0.0;   // |x_j - x_i|
  double dist_truncated = 0.0;  // |y_j - y_i| with y = truncated transform
  double shrinkage = 0.0;       // dist_original - dist_truncated
  double reconstruction_error = 0.0;  // |x_i - xhat_i| + |x_j - xhat_j|
};

ShrinkageRecord pair_shrinkage(const PcaModel& model, std::span<const double> xi,
                               std::span<const double> xj, RetainedDims dims,
                               std::size_t i = 0, std::size_t j = 1);

/// |x_i - xhat_i| + |x_j - xhat_j| where xhat is the reconstruction of the
/// truncated image back in the input space.
double pair_reconstruction_error(const PcaModel& model, std::span<const double> xi,
                                 std::span<const double> xj, RetainedDims dims);

/// Returns x + scale * q_{m+1}, a distinct point with the same truncated
/// image as x. Throws full-rank-injective when m == n and bad-argument when
/// scale is zero.
Vec collision_witness(const PcaModel& model, std::span<const double> x, RetainedDims dims,
                      double scale = 1.0);

/// Mean shrinkage over all N(N-1)/2 unordered pairs of rows. Streams over
/// pairs; the reduction order is fixed so the result does not depend on
/// `threads`. Throws insufficient-pairs when N < 2.
double mean_shrinkage(const PcaModel& model, const Mat& data, RetainedDims dims,
                      unsigned threads = 0);

/// Position of pair (i, j), i < j, in the condensed upper-triangle layout.
std::size_t condensed_index(std::size_t i, std::size_t j, std::size_t n);
/// Inverse of `condensed_index`.
std::pair<std::size_t, std::size_t> condensed_pair(std::size_t index, std::size_t n);

struct PairSampling {
  /// Pairs beyond this count are replaced by a seeded uniform subsample.
  std::size_t max_pairs = 2'000'000;
  std::uint64_t seed = 0;
};

/// Pair list for a dataset of n rows: every pair in condensed order when
/// n(n-1)/2 <= max_pairs, otherwise max_pairs draws with replacement.
std::vector<std::pair<std::size_t, std::size_t>> select_pairs(std::size_t n,
                                                              const PairSampling& sampling,
                                                              bool* sampled = nullptr);

struct ShrinkageStats {
  double mean = 0.0;
  double median = 0.0;
  double max = 0.0;
  std::size_t pair_count = 0;
  bool sampled = false;
  /// Pairs with shrinkage < -tolerance.
  std::size_t negative_violations = 0;
  /// Pairs with shrinkage > reconstruction_error + tolerance.
  std::size_t bound_violations = 0;
};

struct StatsOptions {
  PairSampling sampling;
  unsigned threads = 0;
  double violation_tolerance = 1e-9;
  /// Also evaluate reconstruction errors and the bound violation count.
  bool check_bound = true;
};

ShrinkageStats shrinkage_stats(const PcaModel& model, const Mat& data, RetainedDims dims,
                               const StatsOptions& options = {});

/// Per-pair records for the selected pairs, in selection order.
std::vector<ShrinkageRecord> shrinkage_records(const PcaModel& model, const Mat& data,
                                               RetainedDims dims, const PairSampling& sampling,
                                               unsigned threads = 0);

/// Pearson correlation coefficient, clamped to [-1, 1]. Throws dim-mismatch
/// on unequal or too-short input and zero-variance on a constant series.
double pearson(std::span<const double> xs, std::span<const double> ys);

/// Sum computed by recursive halving; order depends only on the input length.
double pairwise_sum(std::span<const double> values);

}  // namespace pcashrink
