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

#ifndef ORTRACK_IO_FORMATS_H_
#define ORTRACK_IO_FORMATS_H_

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ortrack/types.h"

namespace ortrack {

// One row of a MOT-style detection, ground-truth or track file.
struct DetectionRecord {
  int frame = 1;  // 1-based
  int id = -1;    // -1 when unknown
  Box box;
  double conf = 1.0;

  friend bool operator==(const DetectionRecord&,
                         const DetectionRecord&) = default;
};

// Appearance features keyed by (frame, det_index).
struct FeatureTable {
  using Key = std::pair<int, int>;

  int dim = 0;
  std::map<Key, FeatureVector> entries;

  // nullptr when absent.
  const FeatureVector* Find(int frame, int det_index) const;
};

struct Keypoint {
  double x = 0.0;
  double y = 0.0;
  double c = 0.0;  // confidence in [0, 1]; (0,0,0) means undetected
};

// COCO-18 body layout as emitted by OpenPose.
inline constexpr int kNumKeypoints = 18;
inline constexpr int kRightShoulder = 2;
inline constexpr int kLeftShoulder = 5;
inline constexpr int kRightHip = 8;
inline constexpr int kLeftHip = 11;

struct KeypointRecord {
  int frame = 1;
  int det_index = 0;
  std::array<Keypoint, kNumKeypoints> keypoints{};
};

// MOT CSV: frame,id,bb_left,bb_top,bb_width,bb_height,conf[,x,y,z...].
// Throws ParseError on malformed lines, ValidationError on bad values.
std::vector<DetectionRecord> ParseMot(std::string_view text);

// "# dim=<d>" header followed by "frame,det_index,v0,...,v{d-1}" rows.
FeatureTable ParseFeatures(std::string_view text);

// JSON lines: {"frame":F,"det_index":I,"keypoints":[[x,y,c] x 18]}.
std::vector<KeypointRecord> ParseKeypoints(std::string_view text);

// Canonical MOT CSV; every record must have id >= 1.
std::string WriteTracks(const std::vector<DetectionRecord>& records);

// Writers for the remaining formats, used by the synthetic generator.
std::string WriteDetections(const std::vector<DetectionRecord>& records);
std::string WriteFeatures(const FeatureTable& table);
std::string WriteKeypoints(const std::vector<KeypointRecord>& records);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace ortrack

#endif  // ORTRACK_IO_FORMATS_H_
