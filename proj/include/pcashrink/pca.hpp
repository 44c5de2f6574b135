#pragma once

#include <cstddef>
#include <span>

#include "pcashrink/matrix.hpp"

namespace pcashrink {

/// Number of leading principal components kept by a truncated transform.
/// Range against the model dimension is checked where it is used.
class RetainedDims {
 public:
  constexpr explicit RetainedDims(std::size_t m) : m_(m) {}
  constexpr std::size_t value() const noexcept { return m_; }

 private:
  std::size_t m_;
};

struct PcaModel {
  Vec mean;
  Vec eigenvalues;  // non-increasing, clamped at zero
  Mat components;   // n x n, column k is the k-th eigenvector
  /// Fitted from a single sample; the covariance is identically zero.
  bool degenerate = false;

  std::size_t dim() const noexcept { return mean.size(); }
  /// Throws dim-mismatch unless 1 <= m <= n.
  void check_dims(RetainedDims dims) const;
};

/// Fits mean and covariance eigenbasis from a row-per-sample matrix.
PcaModel fit(const Mat& data, const JacobiOptions& options = {});

/// First m coordinates of Q^t (x - mean).
Vec transform(const PcaModel& model, std::span<const double> x, RetainedDims dims);
/// Transforms every row of `data`; result is N x m.
Mat transform_rows(const PcaModel& model, const Mat& data, RetainedDims dims);

/// Q_m y + mean where Q_m holds the first y.size() components.
Vec reconstruct(const PcaModel& model, std::span<const double> y);

/// Sum of the eigenvalues of the components dropped when keeping m.
double discarded_eigenvalue_sum(const PcaModel& model, RetainedDims dims);

}  // namespace pcashrink
