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

#ifndef ORTRACK_SYNTH_H_
#define ORTRACK_SYNTH_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ortrack/io_formats.h"

namespace ortrack {

struct SynthConfig {
  int persons = 4;
  int frames = 100;
  double width = 640.0;   // px
  double height = 480.0;  // px
  int dim = 8;
  double kappa = 0.8;      // orientation coupling of the features
  double sigma = 0.3;      // feature noise
  double sigma_det = 2.0;  // detection box jitter, px
  bool crossing = false;
  std::uint64_t seed = 0;
  // Free-walking scenario only: walking speed in px/frame and heading
  // change in rad/frame (sign drawn per person; 0 walks straight lines).
  double speed = 3.0;
  double turn_rate = 0.0;

  // Throws std::invalid_argument on violated invariants.
  void Validate() const;
};

// Everything generated for one scenario. All four record sets agree on
// (frame, det_index): det_index is the person's index within its frame.
struct SynthData {
  std::vector<DetectionRecord> ground_truth;
  std::vector<DetectionRecord> detections;
  FeatureTable features;
  std::vector<KeypointRecord> keypoints;
  // Body yaw per GT row, 0 when walking straight away from the camera (up
  // the image) and pi/2 when walking to the right.
  std::vector<double> headings;
  std::vector<int> quadrants;
};

// floor(wrap(theta, [0, 2pi)) / (pi/2)).
int Quadrant(double theta);

// Scenario model: constant-velocity (or constantly turning) walkers; in the
// crossing scenario they spawn on opposite borders aimed at the image center
// and pass it at roughly the same time. Features are
// normalize(u_id + kappa * v_{id, quadrant} + sigma * eps) with unit
// Gaussian identity/quadrant vectors and eps ~ N(0, I/dim). Torso keypoints
// are drawn on the detection box with apparent width proportional to
// cos(yaw), so the S2T sign follows the facing direction.
SynthData Generate(const SynthConfig& config);

// Writes gt.txt, det.txt, features.csv and keypoints.jsonl into `dir`.
void WriteSynthFiles(const SynthData& data, const std::string& dir);

}  // namespace ortrack

#endif  // ORTRACK_SYNTH_H_
