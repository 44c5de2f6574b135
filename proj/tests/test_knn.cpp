#include <gtest/gtest.h>

#include <set>

#include "pcashrink/error.hpp"
#include "pcashrink/knn.hpp"
#include "test_util.hpp"

namespace pcashrink {
namespace {

std::string code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return std::string(e.code_name());
  }
  return "none";
}

TEST(StratifiedFolds, BalancedPerClass) {
  std::vector<std::string> labels;
  for (int k = 0; k < 12; ++k) labels.push_back("a");
  for (int k = 0; k < 8; ++k) labels.push_back("b");
  const auto folds = stratified_folds(labels, 4, 1);
  std::map<std::pair<std::string, std::size_t>, int> counts;
  for (std::size_t s = 0; s < labels.size(); ++s) ++counts[{labels[s], folds[s]}];
  for (std::size_t f = 0; f < 4; ++f) {
    EXPECT_EQ((counts[{"a", f}]), 3);
    EXPECT_EQ((counts[{"b", f}]), 2);
  }
  EXPECT_EQ(folds, stratified_folds(labels, 4, 1));
}

TEST(KnnPredict, DistanceThenIndexTieBreak) {
  const Mat train{{0.0}, {2.0}, {-2.0}, {5.0}};
  const std::vector<std::string> labels{"a", "b", "c", "b"};
  EXPECT_EQ(knn_predict(train, labels, Vec{0.1}, 1), "a");
  // Neighbours of 1.0: idx1 (1), idx0 (1), idx2 (3): tie on distance -> idx0 first.
  EXPECT_EQ(knn_predict(train, labels, Vec{1.0}, 1), "a");
  // k=2 -> one vote each for a and b; a's member ranks first.
  EXPECT_EQ(knn_predict(train, labels, Vec{1.0}, 2), "a");
  EXPECT_EQ(knn_predict(train, labels, Vec{3.0}, 3), "b");
}

TEST(KnnAccuracy, SeparatedClustersArePerfect) {
  Rng rng(4);
  Mat features(40, 3);
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < 40; ++s) {
    const double centre = s < 20 ? 0.0 : 1000.0;
    for (std::size_t c = 0; c < 3; ++c) features(s, c) = centre + rng.uniform(-1.0, 1.0);
    labels.push_back(s < 20 ? "near" : "far");
  }
  EXPECT_EQ(knn_accuracy(features, labels, {1, 5, 7}), 1.0);
}

TEST(KnnAccuracy, IdenticalFeaturesGiveChance) {
  // All points coincide, so neighbours are decided by index order alone and
  // labels are random: accuracy should hover around 1/2.
  double total = 0.0;
  const int seeds = 30;
  for (int seed = 0; seed < seeds; ++seed) {
    Rng rng(static_cast<std::uint64_t>(seed) + 100);
    std::vector<std::string> labels(40, "a");
    std::fill(labels.begin() + 20, labels.end(), "b");
    rng.shuffle(std::span<std::string>(labels));
    const double acc = knn_accuracy(Mat(40, 2, 1.0), labels, {1, 5, static_cast<std::uint64_t>(seed)});
    EXPECT_GE(acc, 0.0);
    EXPECT_LE(acc, 1.0);
    total += acc;
  }
  EXPECT_NEAR(total / seeds, 0.5, 0.15);
}

TEST(KnnAccuracy, TwoPointsTwoFoldsAlwaysWrong) {
  EXPECT_EQ(knn_accuracy(Mat{{0.0}, {1.0}}, {"x", "y"}, {1, 2, 0}), 0.0);
}

TEST(KnnAccuracy, Errors) {
  const Mat features{{0.0}, {1.0}, {2.0}};
  EXPECT_EQ(code_of([&] { knn_accuracy(features, {"a", "b", "a"}, {1, 4, 0}); }), "bad-folds");
  EXPECT_EQ(code_of([&] { knn_accuracy(features, {"a", "b", "a"}, {1, 1, 0}); }), "bad-folds");
  EXPECT_EQ(code_of([&] { knn_accuracy(features, {"a", "a", "a"}, {1, 2, 0}); }),
            "degenerate-labels");
  EXPECT_EQ(code_of([&] { knn_accuracy(features, {"a", "b", "a"}, {0, 2, 0}); }), "bad-argument");
}

TEST(KnnAccuracy, DeterministicAcrossThreads) {
  Rng rng(17);
  const Mat features = testing::random_dataset(90, 4, rng);
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < 90; ++s) labels.push_back(features(s, 0) > features(s, 1) ? "p" : "q");
  KnnConfig config{3, 5, 11, 1};
  const double single = knn_accuracy(features, labels, config);
  config.threads = 4;
  EXPECT_EQ(knn_accuracy(features, labels, config), single);
}

}  // namespace
}  // namespace pcashrink
