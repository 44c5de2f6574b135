#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pcashrink/dataset.hpp"

namespace pcashrink {

struct KnnConfig {
  std::size_t k = 5;
  std::size_t folds = 5;
  std::uint64_t seed = 0;
  unsigned threads = 0;

  std::string describe() const;
};

/// Assigns each sample to a fold so that every class is spread evenly:
/// members of each class (classes in lexicographic order) are shuffled with
/// the seed and dealt round-robin, continuing the rotation across classes.
std::vector<std::size_t> stratified_folds(const std::vector<std::string>& labels,
                                          std::size_t folds, std::uint64_t seed);

/// Majority vote over the k nearest training rows (Euclidean). Neighbours
/// are ordered by (distance, index); vote ties go to the class whose member
/// appears first in that order.
std::string knn_predict(const Mat& train, const std::vector<std::string>& train_labels,
                        std::span<const double> query, std::size_t k);

/// Mean per-fold accuracy of k-NN under stratified cross-validation.
/// Throws bad-folds unless 2 <= folds <= N, bad-argument for k == 0 and
/// degenerate-labels for fewer than two classes.
double knn_accuracy(const Mat& features, const std::vector<std::string>& labels,
                    const KnnConfig& config);
double knn_accuracy(const Dataset& dataset, const KnnConfig& config);

}  // namespace pcashrink
