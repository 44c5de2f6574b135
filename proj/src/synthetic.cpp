#include "pcashrink/synthetic.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "pcashrink/error.hpp"

namespace pcashrink {

Mat random_orthogonal(std::size_t n, Rng& rng) {
  Mat q(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    Vec v(n);
    while (true) {
      for (double& e : v) e = rng.normal();
      // Two Gram-Schmidt passes keep orthogonality at rounding level.
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t prev = 0; prev < c; ++prev) {
          double proj = 0.0;
          for (std::size_t r = 0; r < n; ++r) proj += q(r, prev) * v[r];
          for (std::size_t r = 0; r < n; ++r) v[r] -= proj * q(r, prev);
        }
      }
      const double len = norm(v);
      if (len > 1e-8) {
        for (std::size_t r = 0; r < n; ++r) q(r, c) = v[r] / len;
        break;
      }
    }
  }
  return q;
}

Dataset anisotropic_gaussian(std::span<const double> variances, std::size_t samples,
                             std::uint64_t seed) {
  const std::size_t n = variances.size();
  if (n == 0 || samples == 0) throw Error(ErrorCode::EmptyData, "empty synthetic dataset");
  Rng rng(seed);
  const Mat basis = random_orthogonal(n, rng);

  Dataset ds;
  ds.name = "anisotropic-gaussian(n=" + std::to_string(n) + ",N=" + std::to_string(samples) +
            ",seed=" + std::to_string(seed) + ")";
  ds.features = Mat(samples, n);
  ds.labels.reserve(samples);
  Vec latent(n);
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t k = 0; k < n; ++k) latent[k] = std::sqrt(variances[k]) * rng.normal();
    const Vec x = basis * latent;
    std::copy(x.begin(), x.end(), ds.features.row(s).begin());
    const double score = latent[0] + (n > 2 ? latent[2] : 0.0);
    ds.labels.push_back(score >= 0.0 ? "pos" : "neg");
  }
  return ds;
}

Dataset iris_like(std::uint64_t seed, std::size_t per_class) {
  struct Species {
    const char* name;
    std::array<double, 4> mean;
    std::array<double, 4> spread;
  };
  static constexpr std::array<Species, 3> kSpecies{{
      {"setosa", {5.01, 3.43, 1.46, 0.25}, {0.35, 0.38, 0.17, 0.11}},
      {"versicolor", {5.94, 2.77, 4.26, 1.33}, {0.52, 0.31, 0.47, 0.20}},
      {"virginica", {6.59, 2.97, 5.55, 2.03}, {0.64, 0.32, 0.55, 0.27}},
  }};

  Rng rng(seed);
  Dataset ds;
  ds.name = "iris-like(seed=" + std::to_string(seed) + ")";
  ds.features = Mat(per_class * kSpecies.size(), 4);
  std::size_t row = 0;
  for (const auto& species : kSpecies) {
    for (std::size_t s = 0; s < per_class; ++s, ++row) {
      for (std::size_t f = 0; f < 4; ++f) {
        const double value = species.mean[f] + species.spread[f] * rng.normal();
        ds.features(row, f) = std::max(0.1, std::round(value * 10.0) / 10.0);
      }
      ds.labels.emplace_back(species.name);
    }
  }
  return ds;
}

}  // namespace pcashrink
