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

#include "ortrack/synth.h"

#include <cmath>
#include <filesystem>
#include <numbers>
#include <set>

#include <gtest/gtest.h>

#include "ortrack/orientation.h"

namespace ortrack {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(QuadrantTest, Boundaries) {
  EXPECT_EQ(Quadrant(0.0), 0);
  EXPECT_EQ(Quadrant(kPi), 2);
  EXPECT_EQ(Quadrant(2 * kPi - 1e-9), 3);
  EXPECT_EQ(Quadrant(-1e-9), 3);
  EXPECT_EQ(Quadrant(kPi / 2), 1);
  EXPECT_EQ(Quadrant(5 * kPi / 2 + 0.1), 1);
}

TEST(GenerateTest, NoiselessOrientationFreeScenario) {
  SynthConfig c;
  c.persons = 1;
  c.frames = 3;
  c.sigma = 0.0;
  c.sigma_det = 0.0;
  c.kappa = 0.0;
  const SynthData d = Generate(c);
  ASSERT_EQ(d.ground_truth.size(), 3u);
  ASSERT_EQ(d.detections.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(d.detections[k].box, d.ground_truth[k].box);
    EXPECT_EQ(d.detections[k].frame, d.ground_truth[k].frame);
  }
  const FeatureVector& first = *d.features.Find(1, 0);
  EXPECT_EQ(*d.features.Find(2, 0), first);
  EXPECT_EQ(*d.features.Find(3, 0), first);
}

TEST(GenerateTest, WithoutCouplingFeaturesCenterOnIdentity) {
  SynthConfig c;
  c.persons = 3;
  c.frames = 400;
  c.kappa = 0.0;
  c.sigma = 0.3;
  c.turn_rate = 0.05;
  const SynthData d = Generate(c);
  // Within-person spread is the same early and late in the sequence.
  for (int m = 0; m < c.persons; ++m) {
    FeatureVector mean = FeatureVector::Zero(c.dim);
    for (int f = 1; f <= c.frames; ++f) mean += *d.features.Find(f, m);
    mean /= c.frames;
    double early = 0.0, late = 0.0;
    for (int f = 1; f <= 200; ++f) early += (*d.features.Find(f, m) - mean).norm();
    for (int f = 201; f <= 400; ++f) late += (*d.features.Find(f, m) - mean).norm();
    EXPECT_NEAR(early / 200, late / 200, 0.03);
  }
}

TEST(GenerateTest, FullCircleGivesFourFeatureValues) {
  SynthConfig c;
  c.persons = 1;
  c.frames = 40;
  c.kappa = 1.0;
  c.sigma = 0.0;
  c.sigma_det = 0.0;
  c.turn_rate = 2 * kPi / c.frames;
  const SynthData d = Generate(c);
  std::set<int> quadrants(d.quadrants.begin(), d.quadrants.end());
  EXPECT_EQ(quadrants.size(), 4u);
  std::vector<FeatureVector> distinct;
  for (int f = 1; f <= c.frames; ++f) {
    const FeatureVector& g = *d.features.Find(f, 0);
    bool seen = false;
    for (const auto& v : distinct) seen = seen || v == g;
    if (!seen) distinct.push_back(g);
    EXPECT_NEAR(g.norm(), 1.0, 1e-12);
  }
  EXPECT_EQ(distinct.size(), 4u);
}

TEST(GenerateTest, FilesAgreeOnFrameAndDetIndex) {
  SynthConfig c;
  c.persons = 5;
  c.frames = 20;
  c.crossing = true;
  const SynthData d = Generate(c);
  ASSERT_EQ(d.detections.size(), 100u);
  ASSERT_EQ(d.keypoints.size(), 100u);
  ASSERT_EQ(d.features.entries.size(), 100u);
  for (std::size_t k = 0; k < d.detections.size(); ++k) {
    const int frame = d.detections[k].frame;
    const int det_index = static_cast<int>(k % 5);
    EXPECT_EQ(d.ground_truth[k].frame, frame);
    EXPECT_EQ(d.ground_truth[k].id, det_index + 1);
    EXPECT_EQ(d.keypoints[k].frame, frame);
    EXPECT_EQ(d.keypoints[k].det_index, det_index);
    EXPECT_NE(d.features.Find(frame, det_index), nullptr);
  }
}

TEST(GenerateTest, CrossingWalkersMeetNearCenter) {
  SynthConfig c;
  c.persons = 4;
  c.frames = 200;
  c.crossing = true;
  c.sigma_det = 0.0;
  const SynthData d = Generate(c);
  // Halfway through, every walker is near the image center.
  for (const auto& r : d.ground_truth) {
    if (r.frame != 100) continue;
    EXPECT_LT(std::abs(r.box.center_x() - 320.0), 40.0);
    EXPECT_LT(std::abs(r.box.center_y() - 240.0), 40.0);
  }
}

TEST(SynthPropertyTest, DeterministicForSeed) {
  SynthConfig c;
  c.crossing = true;
  c.seed = 9;
  const SynthData a = Generate(c), b = Generate(c);
  EXPECT_EQ(a.detections, b.detections);
  EXPECT_EQ(WriteFeatures(a.features), WriteFeatures(b.features));
  EXPECT_EQ(WriteKeypoints(a.keypoints), WriteKeypoints(b.keypoints));
  c.seed = 10;
  EXPECT_NE(Generate(c).detections, a.detections);
}

TEST(SynthPropertyTest, S2tSignFollowsFacing) {
  SynthConfig c;
  c.persons = 6;
  c.frames = 120;
  c.sigma_det = 0.0;
  c.turn_rate = 0.07;
  const SynthData d = Generate(c);
  for (std::size_t k = 0; k < d.keypoints.size(); ++k) {
    const double s2t = S2tRatio(ExtractTorso(d.keypoints[k]));
    const double facing = std::cos(d.headings[k]);
    if (std::abs(facing) < 1e-9) continue;
    EXPECT_EQ(s2t > 0.0, facing > 0.0) << "row " << k;
  }
}

TEST(SynthPropertyTest, OrientationChangesAppearance) {
  SynthConfig c;
  c.persons = 10;
  c.frames = 80;
  c.kappa = 0.8;
  c.sigma = 0.05;
  c.turn_rate = 2 * kPi / 40;
  const SynthData d = Generate(c);
  double cross = 0.0, within = 0.0;
  long n_cross = 0, n_within = 0;
  for (int m = 0; m < c.persons; ++m) {
    for (int f1 = 1; f1 <= c.frames; ++f1) {
      for (int f2 = f1 + 1; f2 <= c.frames; ++f2) {
        const double dist =
            (*d.features.Find(f1, m) - *d.features.Find(f2, m)).norm();
        const int q1 = d.quadrants[(f1 - 1) * c.persons + m];
        const int q2 = d.quadrants[(f2 - 1) * c.persons + m];
        if (q1 == q2) {
          within += dist;
          ++n_within;
        } else {
          cross += dist;
          ++n_cross;
        }
      }
    }
  }
  ASSERT_GT(n_within, 0);
  ASSERT_GT(n_cross, 0);
  EXPECT_GT(cross / n_cross, within / n_within);
}

TEST(SynthConfigTest, RejectsInvalid) {
  SynthConfig c;
  c.dim = 1;
  EXPECT_THROW(Generate(c), std::invalid_argument);
  c = SynthConfig{};
  c.persons = 0;
  EXPECT_THROW(Generate(c), std::invalid_argument);
}

TEST(WriteSynthFilesTest, WritesFourParseableFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "ortrack_synth_test";
  std::filesystem::remove_all(dir);
  SynthConfig c;
  c.frames = 5;
  const SynthData d = Generate(c);
  WriteSynthFiles(d, dir.string());
  EXPECT_EQ(ParseMot(ReadFile((dir / "gt.txt").string())).size(), 20u);
  EXPECT_EQ(ParseMot(ReadFile((dir / "det.txt").string())).size(), 20u);
  EXPECT_EQ(ParseFeatures(ReadFile((dir / "features.csv").string())).dim,
            c.dim);
  EXPECT_EQ(ParseKeypoints(ReadFile((dir / "keypoints.jsonl").string())).size(),
            20u);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace ortrack
