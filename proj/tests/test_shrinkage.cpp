#include <gtest/gtest.h>

#include <cmath>

#include "pcashrink/error.hpp"
#include "pcashrink/shrinkage.hpp"
#include "test_util.hpp"

namespace pcashrink {
namespace {

const double kRoot2 = std::sqrt(2.0);

// Data {(1,1), (-1,-1), (1,-1)}: mean (1/3, -1/3), covariance
// [[8/9, 4/9], [4/9, 8/9]] with eigenpairs 4/3 -> (1,1)/sqrt2 and
// 4/9 -> (1,-1)/sqrt2. Values below are worked out by hand from that basis.
Mat three_points() { return Mat{{1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}}; }

TEST(PairShrinkage, ThreePointOracle) {
  const PcaModel model = fit(three_points());
  ASSERT_NEAR(model.eigenvalues[0], 4.0 / 3.0, 1e-14);
  ASSERT_NEAR(model.eigenvalues[1], 4.0 / 9.0, 1e-14);

  const ShrinkageRecord rec = pair_shrinkage(model, Vec{1, 1}, Vec{1, -1}, RetainedDims(1), 0, 2);
  EXPECT_EQ(rec.i, 0u);
  EXPECT_EQ(rec.j, 2u);
  EXPECT_EQ(rec.m, 1u);
  EXPECT_NEAR(rec.dist_original, 2.0, 1e-14);
  EXPECT_NEAR(rec.dist_truncated, kRoot2, 1e-14);
  EXPECT_NEAR(rec.shrinkage, 2.0 - kRoot2, 1e-14);
  // Residuals along (1,-1)/sqrt2: sqrt2/3 for (1,1) and 2 sqrt2/3 for (1,-1).
  EXPECT_NEAR(rec.reconstruction_error, kRoot2, 1e-14);
  EXPECT_NEAR(pair_reconstruction_error(model, Vec{1, 1}, Vec{1, -1}, RetainedDims(1)), kRoot2,
              1e-14);
}

TEST(PairShrinkage, IdenticalPointsAndFullRank) {
  const PcaModel model = fit(three_points());
  const ShrinkageRecord same = pair_shrinkage(model, Vec{0.3, 2}, Vec{0.3, 2}, RetainedDims(1));
  EXPECT_EQ(same.dist_original, 0.0);
  EXPECT_EQ(same.shrinkage, 0.0);

  const ShrinkageRecord full = pair_shrinkage(model, Vec{4, -2}, Vec{-7, 1.5}, RetainedDims(2));
  EXPECT_NEAR(full.shrinkage, 0.0, 1e-9);
  EXPECT_NEAR(full.reconstruction_error, 0.0, 1e-9);
  EXPECT_EQ(pair_reconstruction_error(model, model.mean, model.mean, RetainedDims(1)), 0.0);
  EXPECT_THROW(pair_shrinkage(model, Vec{1}, Vec{1, 2}, RetainedDims(1)), Error);
}

TEST(CollisionWitness, FullRankHasNone) {
  const PcaModel model = fit(three_points());
  try {
    collision_witness(model, Vec{1, 1}, RetainedDims(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code_name(), "full-rank-injective");
  }
  EXPECT_THROW(collision_witness(model, Vec{1, 1}, RetainedDims(1), 0.0), Error);
}

TEST(CollisionWitness, DiscardedDirectionCollides) {
  Rng rng(12);
  const PcaModel model = fit(testing::random_dataset(30, 3, rng));
  const Vec x{0.5, -1.0, 2.0};

  const Vec w = collision_witness(model, x, RetainedDims(2), 1.0);
  for (std::size_t c = 0; c < 3; ++c) EXPECT_NEAR(w[c] - x[c], model.components(c, 2), 1e-15);
  EXPECT_LE(euclidean_distance(transform(model, w, RetainedDims(2)),
                               transform(model, x, RetainedDims(2))),
            1e-9);

  const Vec w25 = collision_witness(model, x, RetainedDims(1), 2.5);
  EXPECT_NEAR(euclidean_distance(w25, x), 2.5, 1e-12);
  EXPECT_LE(euclidean_distance(transform(model, w25, RetainedDims(1)),
                               transform(model, x, RetainedDims(1))),
            1e-9);
}

TEST(MeanShrinkage, Examples) {
  const PcaModel model = fit(three_points());
  // Pairs: (0,1) lies along the kept axis (d = 0); (0,2) and (1,2) each lose
  // 2 - sqrt2.
  EXPECT_NEAR(mean_shrinkage(model, three_points(), RetainedDims(1)), 2.0 * (2.0 - kRoot2) / 3.0,
              1e-14);
  EXPECT_NEAR(mean_shrinkage(model, three_points(), RetainedDims(2)), 0.0, 1e-9);

  const Mat two{{1.0, 1.0}, {1.0, -1.0}};
  const ShrinkageRecord rec = pair_shrinkage(model, two.row(0), two.row(1), RetainedDims(1));
  EXPECT_DOUBLE_EQ(mean_shrinkage(model, two, RetainedDims(1)), rec.shrinkage);

  try {
    mean_shrinkage(model, Mat{{1.0, 1.0}}, RetainedDims(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code_name(), "insufficient-pairs");
  }
}

TEST(MeanShrinkage, IndependentOfThreadCount) {
  Rng rng(5);
  const Mat data = testing::random_dataset(300, 6, rng);
  const PcaModel model = fit(data);
  const double one = mean_shrinkage(model, data, RetainedDims(2), 1);
  for (unsigned threads : {2u, 3u, 8u}) {
    EXPECT_EQ(mean_shrinkage(model, data, RetainedDims(2), threads), one);
  }
  StatsOptions options;
  options.threads = 1;
  const ShrinkageStats a = shrinkage_stats(model, data, RetainedDims(2), options);
  options.threads = 7;
  const ShrinkageStats b = shrinkage_stats(model, data, RetainedDims(2), options);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.median, b.median);
  EXPECT_EQ(a.max, b.max);
  EXPECT_NEAR(a.mean, one, 1e-12);
}

TEST(ShrinkageStats, MedianMaxAndSampling) {
  const PcaModel model = fit(three_points());
  const ShrinkageStats stats = shrinkage_stats(model, three_points(), RetainedDims(1));
  EXPECT_EQ(stats.pair_count, 3u);
  EXPECT_FALSE(stats.sampled);
  EXPECT_NEAR(stats.median, 2.0 - kRoot2, 1e-14);
  EXPECT_NEAR(stats.max, 2.0 - kRoot2, 1e-14);
  EXPECT_EQ(stats.negative_violations, 0u);
  EXPECT_EQ(stats.bound_violations, 0u);

  StatsOptions options;
  options.sampling.max_pairs = 2;
  options.sampling.seed = 9;
  const ShrinkageStats sampled = shrinkage_stats(model, three_points(), RetainedDims(1), options);
  EXPECT_TRUE(sampled.sampled);
  EXPECT_EQ(sampled.pair_count, 2u);
}

TEST(Condensed, IndexRoundTrip) {
  for (std::size_t n : {2u, 3u, 7u, 50u}) {
    std::size_t expected = 0;
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++expected) {
        EXPECT_EQ(condensed_index(i, j, n), expected);
        EXPECT_EQ(condensed_pair(expected, n), std::make_pair(i, j));
      }
  }
  const std::size_t big = 100'000;
  const std::size_t last = big * (big - 1) / 2 - 1;
  EXPECT_EQ(condensed_pair(last, big), std::make_pair(big - 2, big - 1));
}

TEST(Pearson, Examples) {
  const Vec xs{1.0, 2.0, 3.0, 4.5, -2.0};
  Vec affine;
  Vec negated;
  for (double x : xs) {
    affine.push_back(2.0 * x + 3.0);
    negated.push_back(-x);
  }
  EXPECT_NEAR(pearson(xs, affine), 1.0, 1e-12);
  EXPECT_NEAR(pearson(xs, negated), -1.0, 1e-12);
  // sxy = 1, sxx = 2, syy = 2/3 -> 1 / sqrt(4/3).
  EXPECT_NEAR(pearson(Vec{1, 2, 3}, Vec{1, 2, 2}), std::sqrt(3.0) / 2.0, 1e-15);

  try {
    pearson(Vec{1, 2, 3}, Vec{4, 4, 4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code_name(), "zero-variance");
  }
  try {
    pearson(Vec{1, 2, 3}, Vec{1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code_name(), "dim-mismatch");
  }
}

TEST(PearsonProperty, PositiveAffineInvariance) {
  Rng rng(606);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.below(30);
    Vec xs(n), ys(n), xs2(n), ys2(n);
    const double a = std::pow(10.0, rng.uniform(-3, 3));
    const double b = rng.uniform(-100, 100);
    const double c = std::pow(10.0, rng.uniform(-3, 3));
    const double d = rng.uniform(-100, 100);
    for (std::size_t k = 0; k < n; ++k) {
      xs[k] = rng.normal();
      ys[k] = 0.5 * xs[k] + rng.normal();
      xs2[k] = a * xs[k] + b;
      ys2[k] = c * ys[k] + d;
    }
    const double r = pearson(xs, ys);
    EXPECT_GE(r, -1.0);
    EXPECT_LE(r, 1.0);
    EXPECT_NEAR(pearson(xs2, ys2), r, 1e-10);
  }
}

TEST(PairwiseSum, MatchesExactSumOnIntegers) {
  Vec values(1001);
  for (std::size_t k = 0; k < values.size(); ++k) values[k] = static_cast<double>(k);
  EXPECT_EQ(pairwise_sum(values), 500500.0);
  EXPECT_EQ(pairwise_sum(Vec{}), 0.0);
}

// Theorem-style invariants over a seeded corpus; the acceptance binary runs
// the larger version.
TEST(ShrinkageProperty, NonNegativeBoundedAndDecomposes) {
  Rng rng(808);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng.below(9);
    const Mat data = testing::random_dataset(3 + rng.below(20), n, rng);
    const PcaModel model = fit(data);
    for (std::size_t m = 1; m <= n; ++m) {
      for (std::size_t i = 0; i + 1 < data.rows(); ++i)
        for (std::size_t j = i + 1; j < data.rows(); ++j) {
          const auto rec = pair_shrinkage(model, data.row(i), data.row(j), RetainedDims(m), i, j);
          EXPECT_GE(rec.shrinkage, -1e-9);
          EXPECT_LE(rec.shrinkage, rec.reconstruction_error + 1e-9);
          if (m == n) EXPECT_LE(std::abs(rec.shrinkage), 1e-9);

          double tail = 0.0;
          for (std::size_t k = m; k < n; ++k) {
            double proj = 0.0;
            for (std::size_t c = 0; c < n; ++c) {
              proj += model.components(c, k) * (data(j, c) - data(i, c));
            }
            tail += proj * proj;
          }
          const double lhs = rec.dist_original * rec.dist_original;
          const double rhs = rec.dist_truncated * rec.dist_truncated + tail;
          EXPECT_NEAR(lhs, rhs, 1e-8 * std::max(lhs, 1e-300));
        }
    }
  }
}

}  // namespace
}  // namespace pcashrink
