#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "pcashrink/matrix.hpp"
#include "pcashrink/random.hpp"

namespace pcashrink::testing {

inline Mat random_symmetric(std::size_t n, Rng& rng) {
  Mat s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      s(i, j) = rng.uniform(-5.0, 5.0);
      s(j, i) = s(i, j);
    }
  return s;
}

/// N x n samples from a random linear mix of Gaussians with per-axis scales
/// spread over two orders of magnitude, shifted off the origin.
inline Mat random_dataset(std::size_t samples, std::size_t n, Rng& rng) {
  Mat mix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mix(i, j) = rng.normal();
  Vec scale(n);
  Vec shift(n);
  for (std::size_t k = 0; k < n; ++k) {
    scale[k] = std::pow(10.0, rng.uniform(-1.0, 1.0));
    shift[k] = rng.uniform(-3.0, 3.0);
  }
  Mat data(samples, n);
  Vec z(n);
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t k = 0; k < n; ++k) z[k] = scale[k] * rng.normal();
    const Vec x = mix * z;
    for (std::size_t k = 0; k < n; ++k) data(s, k) = x[k] + shift[k];
  }
  return data;
}

inline double max_abs_diff(const Mat& a, const Mat& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    worst = std::max(worst, std::abs(a.data()[k] - b.data()[k]));
  }
  return worst;
}

inline std::string tmp_path(const std::string& name) {
  return std::string(PCASHRINK_TEST_TMP) + "/" + name;
}

}  // namespace pcashrink::testing
