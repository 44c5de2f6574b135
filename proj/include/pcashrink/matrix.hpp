#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace pcashrink {

using Vec = std::vector<double>;

/// Dense row-major real matrix. Entries are finite once constructed through
/// the checked factories; arithmetic helpers assume finite inputs.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, double fill = 0.0);
  Mat(std::initializer_list<std::initializer_list<double>> rows);

  static Mat identity(std::size_t n);
  /// Builds from row vectors; throws dim-mismatch on ragged input and
  /// non-finite on NaN/Inf entries.
  static Mat from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vec column(std::size_t c) const;

  std::span<const double> data() const noexcept { return data_; }

  Mat transposed() const;

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Mat operator*(const Mat& a, const Mat& b);
Vec operator*(const Mat& a, std::span<const double> x);

bool all_finite(std::span<const double> values);

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> v);
double frobenius_norm(const Mat& m);
/// Largest absolute entry.
double max_abs(const Mat& m);

/// Euclidean distance; throws dim-mismatch when lengths differ.
double euclidean_distance(std::span<const double> a, std::span<const double> b);

/// Column means of a row-per-sample matrix.
Vec column_mean(const Mat& data);

/// Population covariance (1/N normalisation) of a row-per-sample matrix.
/// Throws empty-data for zero rows or columns, non-finite for NaN/Inf.
Mat covariance(const Mat& data);

struct EigenPairs {
  Vec values;   // descending
  Mat vectors;  // column k pairs with values[k]
};

struct JacobiOptions {
  /// Stop once the off-diagonal Frobenius norm is at most tol * ||S||_F.
  double tol = 1e-12;
  int max_sweeps = 100;
  /// Max allowed |S_ij - S_ji| relative to max(1, max|S|).
  double symmetry_tol = 1e-10;
};

/// Cyclic Jacobi eigendecomposition of a real symmetric matrix.
///
/// Eigenvalues are returned in non-increasing order using a stable sort over
/// the diagonal produced by the rotations. Each eigenvector is sign-normalised
/// so that its largest-magnitude entry is non-negative; among entries of equal
/// magnitude the lowest index decides.
///
/// Throws not-symmetric if the input is not square or not symmetric within
/// `symmetry_tol`, and NoConvergenceError if the sweep budget is exhausted.
EigenPairs jacobi_eigendecomposition(const Mat& s, const JacobiOptions& options = {});

}  // namespace pcashrink
