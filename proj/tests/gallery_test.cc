// Copyright 2026 The ortrack Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ortrack/gallery.h"

#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "ortrack/errors.h"

namespace ortrack {
namespace {

FeatureVector V(std::initializer_list<double> values) {
  FeatureVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index k = 0;
  for (double x : values) v[k++] = x;
  return v;
}

GalleryOptions Orient(int bins) {
  return {GalleryStrategy::kOrientationBins, bins, 0};
}

TEST(GalleryInsertTest, OrientationBinRunningMean) {
  Gallery g(Orient(2));
  g.Insert(1, V({1, 0}), 1);
  g.Insert(1, V({0, 1}), 1);
  const auto slots = g.Slots(1);
  ASSERT_EQ(slots.size(), 2u);
  EXPECT_TRUE(slots[0].empty());
  EXPECT_EQ(slots[1].count, 2);
  EXPECT_DOUBLE_EQ(slots[1].mean[0], 0.5);
  EXPECT_DOUBLE_EQ(slots[1].mean[1], 0.5);
}

TEST(GalleryInsertTest, AveragedFirstInsert) {
  Gallery g({GalleryStrategy::kAveraged, 7, 0});
  EXPECT_EQ(g.slot_count(), 1);
  g.Insert(4, V({3, 4}), 5);  // bin ignored
  const auto slots = g.Slots(4);
  ASSERT_EQ(slots.size(), 1u);
  EXPECT_EQ(slots[0].count, 1);
  EXPECT_EQ(slots[0].mean, V({3, 4}));
}

TEST(GalleryInsertTest, FullAppendsInOrder) {
  Gallery g({GalleryStrategy::kFull, 1, 0});
  g.Insert(2, V({1, 0}));
  g.Insert(2, V({2, 0}));
  g.Insert(2, V({3, 0}));
  const auto history = g.History(2);
  ASSERT_EQ(history.size(), 3u);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(history[k][0], k + 1.0);
}

TEST(GalleryInsertTest, RejectsDimensionMismatchAndBadBin) {
  Gallery g(Orient(2));
  g.Insert(1, V({1, 0}), 0);
  EXPECT_THROW(g.Insert(1, V({1, 0, 0}), 0), std::invalid_argument);
  EXPECT_THROW(g.Insert(1, V({1, 0}), 2), std::invalid_argument);
  EXPECT_THROW(g.Insert(1, V({1, 0}), -1), std::invalid_argument);
}

TEST(GalleryQueryTest, MinDistanceOverSlots) {
  Gallery g(Orient(2));
  g.Insert(1, V({0, 0}), 0);
  g.Insert(1, V({3, 4}), 1);
  EXPECT_EQ(g.MinDistance(1, V({0, 0})), 0.0);
  // Hand enumeration: |(3,0)-(0,0)| = 3, |(3,0)-(3,4)| = 4.
  EXPECT_DOUBLE_EQ(g.MinDistance(1, V({3, 0})), 3.0);
  EXPECT_THROW(g.MinDistance(9, V({0, 0})), NotFound);
}

TEST(GalleryQueryTest, EmptySlotsAreSkipped) {
  Gallery g(Orient(3));
  g.Insert(1, V({5, 5}), 2);
  // An empty slot read as a zero vector would give 0 here.
  EXPECT_DOUBLE_EQ(g.MinDistance(1, V({0, 0})), std::sqrt(50.0));
}

TEST(GalleryQueryTest, NearestPersonAndTies) {
  Gallery g({GalleryStrategy::kAveraged, 1, 0});
  g.Insert(2, V({1, 1}));
  g.Insert(1, V({0, 0}));
  const auto [id, dist] = g.NearestPerson(V({0.1, 0}));
  EXPECT_EQ(id, 1);
  EXPECT_NEAR(dist, 0.1, 1e-15);
  EXPECT_EQ(g.NearestPerson(V({0.5, 0.5})).first, 1);

  Gallery empty(Orient(2));
  EXPECT_THROW(empty.NearestPerson(V({0, 0})), NotFound);
}

TEST(GalleryModeTest, ParsesNames) {
  EXPECT_EQ(ParseGalleryMode("full").strategy, GalleryStrategy::kFull);
  EXPECT_EQ(ParseGalleryMode("avg").strategy, GalleryStrategy::kAveraged);
  const auto r = ParseGalleryMode("random:3");
  EXPECT_EQ(r.strategy, GalleryStrategy::kRandomBins);
  EXPECT_EQ(r.bins, 3);
  EXPECT_EQ(GalleryModeName(ParseGalleryMode("orient:9")), "orient:9");
  EXPECT_THROW(ParseGalleryMode("orient"), std::invalid_argument);
  EXPECT_THROW(ParseGalleryMode("orient:0"), std::invalid_argument);
  EXPECT_THROW(ParseGalleryMode("bins:2"), std::invalid_argument);
}

TEST(GalleryPropertyTest, RunningMeanMatchesBatchMean) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal(0.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int bins = 1 + trial % 4;
    Gallery g(Orient(bins));
    std::vector<FeatureVector> sums(bins, FeatureVector::Zero(4));
    std::vector<int> counts(bins, 0);
    const int n = 1 + trial % 60;
    for (int k = 0; k < n; ++k) {
      FeatureVector f(4);
      for (int d = 0; d < 4; ++d) f[d] = normal(rng);
      const int bin = static_cast<int>(rng() % bins);
      g.Insert(0, f, bin);
      sums[bin] += f;
      ++counts[bin];
    }
    const auto slots = g.Slots(0);
    for (int b = 0; b < bins; ++b) {
      ASSERT_EQ(slots[b].count, counts[b]);
      if (counts[b] == 0) continue;
      const FeatureVector batch = sums[b] / counts[b];
      EXPECT_LE((slots[b].mean - batch).cwiseAbs().maxCoeff(), 1e-9);
    }
  }
}

TEST(GalleryPropertyTest, FullMatchesBruteForceExactly) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> normal;
  Gallery g({GalleryStrategy::kFull, 1, 0});
  std::vector<FeatureVector> history;
  for (int k = 0; k < 50; ++k) {
    FeatureVector f(3);
    for (int d = 0; d < 3; ++d) f[d] = normal(rng);
    g.Insert(1, f);
    history.push_back(f);
    FeatureVector q(3);
    for (int d = 0; d < 3; ++d) q[d] = normal(rng);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& h : history) best = std::min(best, (q - h).norm());
    EXPECT_EQ(g.MinDistance(1, q), best);
  }
}

TEST(GalleryPropertyTest, RandomBinsReproducibleForSeed) {
  auto build = [](std::uint64_t seed) {
    Gallery g({GalleryStrategy::kRandomBins, 3, seed});
    for (int k = 0; k < 40; ++k) {
      g.Insert(k % 4, V({static_cast<double>(k), 1.0}));
    }
    return g;
  };
  const Gallery a = build(42), b = build(42), c = build(43);
  bool any_difference = false;
  for (int p = 0; p < 4; ++p) {
    const auto sa = a.Slots(p), sb = b.Slots(p), sc = c.Slots(p);
    for (int s = 0; s < 3; ++s) {
      ASSERT_EQ(sa[s].count, sb[s].count);
      if (sa[s].count > 0) EXPECT_EQ(sa[s].mean, sb[s].mean);
      any_difference = any_difference || sa[s].count != sc[s].count;
    }
  }
  EXPECT_TRUE(any_difference);
}

TEST(GalleryPropertyTest, StorageCounts) {
  std::mt19937_64 rng(1);
  const int persons = 6, inserts = 500, bins = 3;
  Gallery full({GalleryStrategy::kFull, 1, 0});
  Gallery orient(Orient(bins));
  Gallery random({GalleryStrategy::kRandomBins, bins, 9});
  Gallery avg({GalleryStrategy::kAveraged, 1, 0});
  for (int k = 0; k < inserts; ++k) {
    const int person = static_cast<int>(rng() % persons);
    const int bin = static_cast<int>(rng() % bins);
    const FeatureVector f = V({static_cast<double>(k), 0.0});
    full.Insert(person, f, bin);
    orient.Insert(person, f, bin);
    random.Insert(person, f, bin);
    avg.Insert(person, f, bin);
  }
  EXPECT_EQ(full.StoredVectors(), static_cast<std::size_t>(inserts));
  EXPECT_LE(orient.StoredVectors(), static_cast<std::size_t>(persons * bins));
  EXPECT_LE(random.StoredVectors(), static_cast<std::size_t>(persons * bins));
  EXPECT_LE(avg.StoredVectors(), static_cast<std::size_t>(persons));
}

}  // namespace
}  // namespace ortrack
