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

#ifndef ORTRACK_ORIENTATION_H_
#define ORTRACK_ORIENTATION_H_

#include "ortrack/io_formats.h"

namespace ortrack {

struct TorsoPoints {
  Keypoint right_shoulder;
  Keypoint left_shoulder;
  Keypoint right_hip;
  Keypoint left_hip;
};

TorsoPoints ExtractTorso(const KeypointRecord& record);

struct Orientation {
  double s2t = 0.0;
  int bin = 0;
  bool valid = false;
};

inline constexpr double kDefaultMinTorsoHeight = 1e-6;  // px

// Signed shoulder-to-torso ratio: confidence-weighted body width over body
// height, with image y growing downward. Positive when the person faces
// away from the camera, negative when facing it.
//
// A left/right pair contributes to the width (or a shoulder/hip pair to the
// height) only when both of its keypoints have non-zero confidence, so an
// undetected keypoint never influences the result.
//
// Throws OrientationUnavailable when the confidence mass is zero or the
// weighted torso height is below `min_height`.
double S2tRatio(const TorsoPoints& torso,
                double min_height = kDefaultMinTorsoHeight);

// Uniform partition of [-smax, smax] into `bins` intervals; values outside
// the range clamp to the end bins. Requires bins >= 1 and smax > 0.
int OrientationBin(double s2t, int bins, double smax);

// Bin used for detections whose orientation is unavailable.
inline int FallbackBin(int bins) { return bins / 2; }

// S2T plus bin, falling back to FallbackBin() when the torso is unusable.
Orientation EstimateOrientation(const TorsoPoints& torso, int bins,
                                double smax);

}  // namespace ortrack

#endif  // ORTRACK_ORIENTATION_H_
