#include "pcashrink/pca.hpp"

#include <algorithm>

#include "pcashrink/error.hpp"

namespace pcashrink {

void PcaModel::check_dims(RetainedDims dims) const {
  if (dims.value() < 1 || dims.value() > dim()) {
    throw Error(ErrorCode::DimMismatch, "retained dimension " + std::to_string(dims.value()) +
                                            " outside [1, " + std::to_string(dim()) + "]");
  }
}

PcaModel fit(const Mat& data, const JacobiOptions& options) {
  const Mat cov = covariance(data);
  EigenPairs eig = jacobi_eigendecomposition(cov, options);
  // The covariance is PSD; negative eigenvalues are rounding noise.
  for (double& value : eig.values) value = std::max(value, 0.0);
  return PcaModel{column_mean(data), std::move(eig.values), std::move(eig.vectors),
                  data.rows() == 1};
}

Vec transform(const PcaModel& model, std::span<const double> x, RetainedDims dims) {
  model.check_dims(dims);
  const std::size_t n = model.dim();
  if (x.size() != n) {
    throw Error(ErrorCode::DimMismatch, "input has " + std::to_string(x.size()) +
                                            " features, model expects " + std::to_string(n));
  }
  Vec centered(n);
  for (std::size_t c = 0; c < n; ++c) centered[c] = x[c] - model.mean[c];

  Vec y(dims.value());
  for (std::size_t k = 0; k < y.size(); ++k) {
    double sum = 0.0;
    for (std::size_t c = 0; c < n; ++c) sum += model.components(c, k) * centered[c];
    y[k] = sum;
  }
  return y;
}

Mat transform_rows(const PcaModel& model, const Mat& data, RetainedDims dims) {
  Mat out(data.rows(), dims.value());
  for (std::size_t r = 0; r < data.rows(); ++r) {
    const Vec y = transform(model, data.row(r), dims);
    std::copy(y.begin(), y.end(), out.row(r).begin());
  }
  return out;
}

Vec reconstruct(const PcaModel& model, std::span<const double> y) {
  const std::size_t n = model.dim();
  if (y.size() > n) {
    throw Error(ErrorCode::DimMismatch, "image has " + std::to_string(y.size()) +
                                            " coordinates, model has " + std::to_string(n));
  }
  Vec x = model.mean;
  for (std::size_t k = 0; k < y.size(); ++k)
    for (std::size_t c = 0; c < n; ++c) x[c] += model.components(c, k) * y[k];
  return x;
}

double discarded_eigenvalue_sum(const PcaModel& model, RetainedDims dims) {
  model.check_dims(dims);
  // Accumulate from the tail so the result is non-increasing in m bit for bit.
  double sum = 0.0;
  for (std::size_t k = model.dim(); k > dims.value(); --k) sum += model.eigenvalues[k - 1];
  return sum;
}

}  // namespace pcashrink
