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

#ifndef ORTRACK_METRICS_H_
#define ORTRACK_METRICS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ortrack/gallery.h"
#include "ortrack/io_formats.h"

namespace ortrack {

struct LabeledFeature {
  int person = 0;
  FeatureVector feature;
  std::optional<double> s2t;
};

using LabeledFeatureSet = std::vector<LabeledFeature>;

struct GalleryQuerySplit {
  LabeledFeatureSet gallery;
  LabeledFeatureSet query;
};

// Per-person stratified random split. A person with n >= 2 items puts
// round(fraction * n) of them (clamped to [1, n-1]) in the gallery and the
// rest in the query set; single-item persons go to the gallery only.
GalleryQuerySplit SplitGalleryQuery(const LabeledFeatureSet& items,
                                    double gallery_fraction,
                                    std::uint64_t seed);

// Inserts every item. Orientation bins come from the item's S2T (or the
// fallback bin when it has none).
Gallery BuildGallery(const GalleryOptions& options,
                     const LabeledFeatureSet& items, double smax = 1.0);

// Fraction of queries whose nearest gallery person has the query's id.
double Rank1(const Gallery& gallery, const LabeledFeatureSet& queries);

struct MotScores {
  double idf1 = 0.0;
  std::int64_t idtp = 0;
  std::int64_t idfp = 0;
  std::int64_t idfn = 0;
  std::int64_t id_switches = 0;
};

inline constexpr double kDefaultIouThreshold = 0.5;

// Frames in which GT trajectory a and predicted trajectory b overlap with
// IoU >= threshold, as a dense matrix over the sorted id lists.
struct TrajectoryOverlaps {
  std::vector<int> gt_ids;
  std::vector<int> pred_ids;
  Eigen::MatrixXd counts;
};

TrajectoryOverlaps CountTrajectoryOverlaps(
    const std::vector<DetectionRecord>& gt,
    const std::vector<DetectionRecord>& pred, double iou_threshold);

// Identity scores from the one-to-one trajectory matching that maximizes
// matched detections; id_switches is filled by IdSwitches().
MotScores Idf1(const std::vector<DetectionRecord>& gt,
               const std::vector<DetectionRecord>& pred,
               double iou_threshold = kDefaultIouThreshold);

// Per-frame IoU-maximizing matching that first keeps each GT object's
// previous-frame track when it still clears the threshold. Counts every
// change of a GT object's matched track id relative to its most recent one.
std::int64_t IdSwitches(const std::vector<DetectionRecord>& gt,
                        const std::vector<DetectionRecord>& pred,
                        double iou_threshold = kDefaultIouThreshold);

// "metric,value" CSV.
std::string WriteMetricsCsv(
    const std::vector<std::pair<std::string, double>>& rows);

}  // namespace ortrack

#endif  // ORTRACK_METRICS_H_
