#pragma once

#include <cstddef>
#include <cstdint>

#include "pcashrink/dataset.hpp"
#include "pcashrink/random.hpp"

namespace pcashrink {

/// Haar-ish random orthogonal matrix from Gram-Schmidt on Gaussian columns.
Mat random_orthogonal(std::size_t n, Rng& rng);

/// Zero-mean Gaussian samples whose covariance has the given eigenvalue
/// profile, rotated by a random orthogonal basis. Labels split the samples
/// by the sign of the sum of the first and third latent coordinates.
Dataset anisotropic_gaussian(std::span<const double> variances, std::size_t samples,
                             std::uint64_t seed);

/// Three-class, four-feature dataset with an Iris-style schema
/// (sepal_length, sepal_width, petal_length, petal_width, species).
Dataset iris_like(std::uint64_t seed, std::size_t per_class = 50);

}  // namespace pcashrink
