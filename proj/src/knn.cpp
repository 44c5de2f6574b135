#include "pcashrink/knn.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "parallel.hpp"
#include "pcashrink/error.hpp"
#include "pcashrink/random.hpp"

namespace pcashrink {

std::string KnnConfig::describe() const {
  return "knn(k=" + std::to_string(k) + ",folds=" + std::to_string(folds) +
         ",metric=euclidean,cv=stratified)";
}

std::vector<std::size_t> stratified_folds(const std::vector<std::string>& labels,
                                          std::size_t folds, std::uint64_t seed) {
  std::map<std::string, std::vector<std::size_t>> by_class;
  for (std::size_t s = 0; s < labels.size(); ++s) by_class[labels[s]].push_back(s);

  Rng rng(seed);
  std::vector<std::size_t> assignment(labels.size());
  std::size_t next_fold = 0;
  for (auto& [label, members] : by_class) {
    rng.shuffle(std::span<std::size_t>(members));
    for (std::size_t s : members) {
      assignment[s] = next_fold;
      next_fold = (next_fold + 1) % folds;
    }
  }
  return assignment;
}

std::string knn_predict(const Mat& train, const std::vector<std::string>& train_labels,
                        std::span<const double> query, std::size_t k) {
  std::vector<std::pair<double, std::size_t>> neighbours(train.rows());
  for (std::size_t r = 0; r < train.rows(); ++r) {
    neighbours[r] = {euclidean_distance(train.row(r), query), r};
  }
  const std::size_t take = std::min(k, neighbours.size());
  std::partial_sort(neighbours.begin(), neighbours.begin() + static_cast<std::ptrdiff_t>(take),
                    neighbours.end());

  // votes[label] = (count, rank of first appearance)
  std::map<std::string_view, std::pair<std::size_t, std::size_t>> votes;
  for (std::size_t rank = 0; rank < take; ++rank) {
    auto [it, inserted] = votes.try_emplace(train_labels[neighbours[rank].second], 0, rank);
    ++it->second.first;
  }
  auto best = votes.begin();
  for (auto it = votes.begin(); it != votes.end(); ++it) {
    const auto [count, rank] = it->second;
    if (count > best->second.first || (count == best->second.first && rank < best->second.second)) {
      best = it;
    }
  }
  return std::string(best->first);
}

double knn_accuracy(const Mat& features, const std::vector<std::string>& labels,
                    const KnnConfig& config) {
  const std::size_t n = features.rows();
  if (labels.size() != n) throw Error(ErrorCode::DimMismatch, "label count differs from rows");
  if (config.k == 0) throw Error(ErrorCode::BadArgument, "k must be at least 1");
  if (config.folds < 2 || config.folds > n) {
    throw Error(ErrorCode::BadFolds, "folds=" + std::to_string(config.folds) +
                                         " must lie in [2, " + std::to_string(n) + "]");
  }
  if (std::all_of(labels.begin(), labels.end(), [&](const auto& l) { return l == labels[0]; })) {
    throw Error(ErrorCode::DegenerateLabels, "classification needs at least two classes");
  }

  const auto assignment = stratified_folds(labels, config.folds, config.seed);
  std::vector<std::vector<std::size_t>> members(config.folds);
  for (std::size_t s = 0; s < n; ++s) members[assignment[s]].push_back(s);

  Vec fold_accuracy(config.folds);
  for (std::size_t fold = 0; fold < config.folds; ++fold) {
    Mat train(n - members[fold].size(), features.cols());
    std::vector<std::string> train_labels;
    train_labels.reserve(train.rows());
    for (std::size_t s = 0, r = 0; s < n; ++s) {
      if (assignment[s] == fold) continue;
      std::copy(features.row(s).begin(), features.row(s).end(), train.row(r++).begin());
      train_labels.push_back(labels[s]);
    }

    const auto& test = members[fold];
    std::vector<unsigned char> correct(test.size());
    detail::parallel_for(test.size(), config.threads, [&](std::size_t t) {
      correct[t] = knn_predict(train, train_labels, features.row(test[t]), config.k) ==
                   labels[test[t]];
    });
    const auto hits = std::accumulate(correct.begin(), correct.end(), std::size_t{0});
    fold_accuracy[fold] = static_cast<double>(hits) / static_cast<double>(test.size());
  }
  return std::accumulate(fold_accuracy.begin(), fold_accuracy.end(), 0.0) /
         static_cast<double>(config.folds);
}

double knn_accuracy(const Dataset& dataset, const KnnConfig& config) {
  return knn_accuracy(dataset.features, dataset.labels, config);
}

}  // namespace pcashrink
