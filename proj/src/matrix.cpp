#include "pcashrink/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pcashrink/error.hpp"

namespace pcashrink {

Mat::Mat(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Mat::Mat(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorCode::DimMismatch, "ragged matrix initializer");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
  if (!all_finite(data_)) throw Error(ErrorCode::NonFinite, "matrix has non-finite entry");
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::DimMismatch, "row " + std::to_string(r) + " has " +
                                              std::to_string(rows[r].size()) +
                                              " entries, expected " + std::to_string(cols));
    }
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  if (!all_finite(m.data())) throw Error(ErrorCode::NonFinite, "matrix has non-finite entry");
  return m;
}

Vec Mat::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Mat Mat::transposed() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimMismatch, "matrix product shape mismatch");
  Mat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Vec operator*(const Mat& a, std::span<const double> x) {
  if (a.cols() != x.size()) throw Error(ErrorCode::DimMismatch, "matrix-vector shape mismatch");
  Vec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = dot(a.row(i), x);
  return out;
}

bool all_finite(std::span<const double> values) {
  return std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); });
}

double dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) sum += a[k] * b[k];
  return sum;
}

double norm(std::span<const double> v) { return std::sqrt(dot(v, v)); }

double frobenius_norm(const Mat& m) { return norm(m.data()); }

double max_abs(const Mat& m) {
  double best = 0.0;
  for (double v : m.data()) best = std::max(best, std::abs(v));
  return best;
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimMismatch, "distance between vectors of length " +
                                            std::to_string(a.size()) + " and " +
                                            std::to_string(b.size()));
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    sum += d * d;
  }
  return std::sqrt(sum);
}

Vec column_mean(const Mat& data) {
  Vec mean(data.cols(), 0.0);
  for (std::size_t r = 0; r < data.rows(); ++r) {
    const auto row = data.row(r);
    for (std::size_t c = 0; c < data.cols(); ++c) mean[c] += row[c];
  }
  for (double& v : mean) v /= static_cast<double>(data.rows());
  return mean;
}

Mat covariance(const Mat& data) {
  if (data.rows() == 0 || data.cols() == 0) {
    throw Error(ErrorCode::EmptyData, "covariance of an empty dataset");
  }
  if (!all_finite(data.data())) throw Error(ErrorCode::NonFinite, "dataset has non-finite entry");

  const std::size_t n = data.cols();
  const Vec mean = column_mean(data);
  Mat cov(n, n);
  Vec dev(n);
  for (std::size_t r = 0; r < data.rows(); ++r) {
    const auto row = data.row(r);
    for (std::size_t c = 0; c < n; ++c) dev[c] = row[c] - mean[c];
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) cov(a, b) += dev[a] * dev[b];
  }
  const double scale = 1.0 / static_cast<double>(data.rows());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      cov(a, b) *= scale;
      cov(b, a) = cov(a, b);
    }
  return cov;
}

namespace {

double off_diagonal_norm(const Mat& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) sum += a(i, j) * a(i, j);
  return std::sqrt(sum);
}

// Zeroes a(p, q) with a plane rotation applied on both sides; accumulates
// the rotation into v.
void rotate(Mat& a, Mat& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
  const double c = 1.0 / std::hypot(t, 1.0);
  const double s = t * c;
  const std::size_t n = a.rows();

  for (std::size_t k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

void normalize_sign(Mat& vectors, std::size_t col) {
  const std::size_t n = vectors.rows();
  double largest = 0.0;
  for (std::size_t r = 0; r < n; ++r) largest = std::max(largest, std::abs(vectors(r, col)));
  // Entries within rounding of the largest magnitude count as tied.
  const double cutoff = largest * (1.0 - 1e-12);
  for (std::size_t r = 0; r < n; ++r) {
    if (std::abs(vectors(r, col)) >= cutoff) {
      if (vectors(r, col) < 0.0) {
        for (std::size_t k = 0; k < n; ++k) vectors(k, col) = -vectors(k, col);
      }
      return;
    }
  }
}

}  // namespace

EigenPairs jacobi_eigendecomposition(const Mat& s, const JacobiOptions& options) {
  const std::size_t n = s.rows();
  if (s.cols() != n) throw Error(ErrorCode::NotSymmetric, "matrix is not square");
  if (!all_finite(s.data())) throw Error(ErrorCode::NonFinite, "matrix has non-finite entry");

  const double scale = std::max(1.0, max_abs(s));
  Mat a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(s(i, j) - s(j, i)) > options.symmetry_tol * scale) {
        throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric at (" + std::to_string(i) +
                                                 ", " + std::to_string(j) + ")");
      }
      a(i, j) = 0.5 * (s(i, j) + s(j, i));
    }

  Mat v = Mat::identity(n);
  const double target = options.tol * frobenius_norm(a);
  double residual = off_diagonal_norm(a);
  int sweep = 0;
  while (residual > target) {
    if (sweep == options.max_sweeps) throw NoConvergenceError(residual, sweep);
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    residual = off_diagonal_norm(a);
    ++sweep;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

  EigenPairs out{Vec(n), Mat(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
    normalize_sign(out.vectors, k);
  }
  return out;
}

}  // namespace pcashrink
