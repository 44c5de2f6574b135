#include "pcashrink/shrinkage.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"
#include "pcashrink/error.hpp"
#include "pcashrink/random.hpp"

namespace pcashrink {

namespace {

void check_length(const PcaModel& model, std::span<const double> x) {
  if (x.size() != model.dim()) {
    throw Error(ErrorCode::DimMismatch, "vector has " + std::to_string(x.size()) +
                                            " entries, model expects " +
                                            std::to_string(model.dim()));
  }
}

double reconstruction_distance(const PcaModel& model, std::span<const double> x,
                               RetainedDims dims) {
  return euclidean_distance(x, reconstruct(model, transform(model, x, dims)));
}

Vec point_reconstruction_errors(const PcaModel& model, const Mat& data, RetainedDims dims,
                                unsigned threads) {
  Vec errors(data.rows());
  detail::parallel_for(data.rows(), threads, [&](std::size_t r) {
    errors[r] = reconstruction_distance(model, data.row(r), dims);
  });
  return errors;
}

constexpr std::size_t kPairBlock = 4096;

}  // namespace

ShrinkageRecord pair_shrinkage(const PcaModel& model, std::span<const double> xi,
                               std::span<const double> xj, RetainedDims dims, std::size_t i,
                               std::size_t j) {
  check_length(model, xi);
  check_length(model, xj);
  ShrinkageRecord rec;
  rec.i = i;
  rec.j = j;
  rec.m = dims.value();
  rec.dist_original = euclidean_distance(xj, xi);
  rec.dist_truncated = euclidean_distance(transform(model, xj, dims), transform(model, xi, dims));
  rec.shrinkage = rec.dist_original - rec.dist_truncated;
  rec.reconstruction_error = pair_reconstruction_error(model, xi, xj, dims);
  return rec;
}

double pair_reconstruction_error(const PcaModel& model, std::span<const double> xi,
                                 std::span<const double> xj, RetainedDims dims) {
  check_length(model, xi);
  check_length(model, xj);
  return reconstruction_distance(model, xi, dims) + reconstruction_distance(model, xj, dims);
}

Vec collision_witness(const PcaModel& model, std::span<const double> x, RetainedDims dims,
                      double scale) {
  model.check_dims(dims);
  check_length(model, x);
  if (dims.value() == model.dim()) {
    throw Error(ErrorCode::FullRankInjective,
                "no collision exists: the untruncated transform is injective");
  }
  if (scale == 0.0 || !std::isfinite(scale)) {
    throw Error(ErrorCode::BadArgument, "witness scale must be finite and non-zero");
  }
  Vec witness(x.begin(), x.end());
  for (std::size_t c = 0; c < witness.size(); ++c) {
    witness[c] += scale * model.components(c, dims.value());
  }
  return witness;
}

double mean_shrinkage(const PcaModel& model, const Mat& data, RetainedDims dims,
                      unsigned threads) {
  const std::size_t n = data.rows();
  if (n < 2) throw Error(ErrorCode::InsufficientPairs, "mean shrinkage needs at least two rows");
  const Mat images = transform_rows(model, data, dims);

  Vec row_sums(n - 1);
  detail::parallel_for(n - 1, threads, [&](std::size_t i) {
    Vec terms(n - i - 1);
    for (std::size_t j = i + 1; j < n; ++j) {
      terms[j - i - 1] = euclidean_distance(data.row(j), data.row(i)) -
                         euclidean_distance(images.row(j), images.row(i));
    }
    row_sums[i] = pairwise_sum(terms);
  });
  return pairwise_sum(row_sums) / (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
}

std::size_t condensed_index(std::size_t i, std::size_t j, std::size_t n) {
  if (i > j) std::swap(i, j);
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> condensed_pair(std::size_t index, std::size_t n) {
  // Row i starts at offset(i) = i(2n - i - 1)/2; estimate i then correct.
  const double nn = static_cast<double>(n);
  const double disc = (2.0 * nn - 1.0) * (2.0 * nn - 1.0) - 8.0 * static_cast<double>(index);
  auto i = static_cast<std::size_t>(
      std::max(0.0, std::floor(((2.0 * nn - 1.0) - std::sqrt(std::max(disc, 0.0))) / 2.0)));
  auto offset = [n](std::size_t row) { return row * (2 * n - row - 1) / 2; };
  while (i > 0 && offset(i) > index) --i;
  while (i + 1 < n && offset(i + 1) <= index) ++i;
  return {i, i + 1 + (index - offset(i))};
}

std::vector<std::pair<std::size_t, std::size_t>> select_pairs(std::size_t n,
                                                              const PairSampling& sampling,
                                                              bool* sampled) {
  const std::size_t total = n < 2 ? 0 : n * (n - 1) / 2;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (total <= sampling.max_pairs) {
    pairs.reserve(total);
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    if (sampled) *sampled = false;
    return pairs;
  }
  Rng rng(sampling.seed);
  pairs.reserve(sampling.max_pairs);
  for (std::size_t p = 0; p < sampling.max_pairs; ++p) {
    pairs.push_back(condensed_pair(static_cast<std::size_t>(rng.below(total)), n));
  }
  if (sampled) *sampled = true;
  return pairs;
}

ShrinkageStats shrinkage_stats(const PcaModel& model, const Mat& data, RetainedDims dims,
                               const StatsOptions& options) {
  if (data.rows() < 2) {
    throw Error(ErrorCode::InsufficientPairs, "shrinkage statistics need at least two rows");
  }
  model.check_dims(dims);
  ShrinkageStats stats;
  const auto pairs = select_pairs(data.rows(), options.sampling, &stats.sampled);
  stats.pair_count = pairs.size();

  const Mat images = transform_rows(model, data, dims);
  Vec point_errors;
  if (options.check_bound) {
    point_errors = point_reconstruction_errors(model, data, dims, options.threads);
  }

  Vec values(pairs.size());
  std::vector<unsigned char> negative(pairs.size(), 0);
  std::vector<unsigned char> bound(pairs.size(), 0);
  const std::size_t blocks = (pairs.size() + kPairBlock - 1) / kPairBlock;
  const double tol = options.violation_tolerance;
  detail::parallel_for(blocks, options.threads, [&](std::size_t block) {
    const std::size_t end = std::min(pairs.size(), (block + 1) * kPairBlock);
    for (std::size_t p = block * kPairBlock; p < end; ++p) {
      const auto [i, j] = pairs[p];
      const double d = euclidean_distance(data.row(j), data.row(i)) -
                       euclidean_distance(images.row(j), images.row(i));
      values[p] = d;
      negative[p] = d < -tol;
      if (options.check_bound) bound[p] = d > point_errors[i] + point_errors[j] + tol;
    }
  });

  stats.negative_violations = static_cast<std::size_t>(std::count(negative.begin(), negative.end(), 1));
  stats.bound_violations = static_cast<std::size_t>(std::count(bound.begin(), bound.end(), 1));
  stats.mean = pairwise_sum(values) / static_cast<double>(values.size());
  stats.max = *std::max_element(values.begin(), values.end());

  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
  stats.median = values[mid];
  if (values.size() % 2 == 0) {
    const double lower = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
    stats.median = 0.5 * (lower + stats.median);
  }
  return stats;
}

std::vector<ShrinkageRecord> shrinkage_records(const PcaModel& model, const Mat& data,
                                               RetainedDims dims, const PairSampling& sampling,
                                               unsigned threads) {
  model.check_dims(dims);
  const auto pairs = select_pairs(data.rows(), sampling);
  const Mat images = transform_rows(model, data, dims);
  const Vec point_errors = point_reconstruction_errors(model, data, dims, threads);

  std::vector<ShrinkageRecord> records(pairs.size());
  const std::size_t blocks = (pairs.size() + kPairBlock - 1) / kPairBlock;
  detail::parallel_for(blocks, threads, [&](std::size_t block) {
    const std::size_t end = std::min(pairs.size(), (block + 1) * kPairBlock);
    for (std::size_t p = block * kPairBlock; p < end; ++p) {
      const auto [i, j] = pairs[p];
      ShrinkageRecord& rec = records[p];
      rec.i = i;
      rec.j = j;
      rec.m = dims.value();
      rec.dist_original = euclidean_distance(data.row(j), data.row(i));
      rec.dist_truncated = euclidean_distance(images.row(j), images.row(i));
      rec.shrinkage = rec.dist_original - rec.dist_truncated;
      rec.reconstruction_error = point_errors[i] + point_errors[j];
    }
  });
  return records;
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw Error(ErrorCode::DimMismatch, "pearson series differ in length");
  }
  if (xs.size() < 2) throw Error(ErrorCode::DimMismatch, "pearson needs at least two points");

  auto constant = [](std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [&](double e) { return e == v.front(); });
  };
  if (constant(xs) || constant(ys)) {
    throw Error(ErrorCode::ZeroVariance, "pearson of a constant series");
  }

  const double count = static_cast<double>(xs.size());
  const double mean_x = pairwise_sum(xs) / count;
  const double mean_y = pairwise_sum(ys) / count;
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double dx = xs[k] - mean_x;
    const double dy = ys[k] - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace pcashrink
