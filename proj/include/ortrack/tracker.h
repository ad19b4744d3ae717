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

#ifndef ORTRACK_TRACKER_H_
#define ORTRACK_TRACKER_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ortrack/association.h"
#include "ortrack/gallery.h"
#include "ortrack/io_formats.h"
#include "ortrack/kalman.h"
#include "ortrack/orientation.h"

namespace ortrack {

struct TrackerConfig {
  int bins = 5;
  double smax = 1.0;
  int particles = 20;
  AssociationMode mode = AssociationMode::kPosApp;
  GalleryStrategy gallery = GalleryStrategy::kOrientationBins;
  double q = 1.0;
  double r = 10.0;
  double d0_pos = 4.0;
  double d0_app = 1.5;
  int confirm_hits = 2;
  int max_age = 30;
  std::uint64_t seed = 0;
  double gate = kChiSquareGate4;

  // Throws std::invalid_argument on out-of-range values.
  void Validate() const;
  GalleryOptions gallery_options() const;
};

enum class TrackStatus { kTentative, kConfirmed, kDead };

struct Track {
  int track_id = 0;
  TrackState state;
  int hits = 0;
  int misses = 0;
  TrackStatus status = TrackStatus::kTentative;
};

// Detections of one frame joined with their features and torso keypoints on
// det_index (the position within `detections`).
struct FrameObservations {
  int frame = 1;
  std::vector<DetectionRecord> detections;
  std::vector<std::optional<FeatureVector>> features;  // empty or per detection
  std::vector<std::optional<TorsoPoints>> torsos;      // empty or per detection
};

// Sequential tracking-by-detection driver: predict, associate through the
// particle filter, update the consensus tracks, grow their galleries.
//
// Only the heaviest particle's assignment drives the Kalman filters and the
// gallery; particles carry association hypotheses and weights only.
class Tracker {
 public:
  explicit Tracker(TrackerConfig config);

  // Returns one record per confirmed track updated in this frame, ordered by
  // track id. Throws ValidationError when a feature or keypoint row that the
  // configuration needs is missing.
  std::vector<DetectionRecord> ProcessFrame(const FrameObservations& obs);

  const std::vector<Track>& tracks() const { return tracks_; }
  const Gallery& gallery() const { return gallery_; }
  const TrackerConfig& config() const { return config_; }
  int tracks_created() const { return next_id_ - 1; }

 private:
  bool NeedsFeatures() const;
  bool NeedsTorsos() const;

  TrackerConfig config_;
  std::vector<Track> tracks_;  // includes dead tracks, in creation order
  Gallery gallery_;
  ParticleSet particles_;
  std::mt19937_64 rng_;
  int next_id_ = 1;
};

// Joins the three input files and runs every frame from 1 to the last frame
// present in `detections_text`; missing frames are empty. The feature and
// keypoint texts may be empty when the configuration does not need them.
// Output is sorted by (frame, track id).
std::vector<DetectionRecord> RunSequence(const TrackerConfig& config,
                                         const std::string& detections_text,
                                         const std::string& features_text,
                                         const std::string& keypoints_text);

}  // namespace ortrack

#endif  // ORTRACK_TRACKER_H_
