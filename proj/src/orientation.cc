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

#include "ortrack/orientation.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ortrack/errors.h"

namespace ortrack {
namespace {

// Sum of both confidences, or zero if either keypoint is missing.
double PairWeight(const Keypoint& a, const Keypoint& b) {
  return (a.c > 0.0 && b.c > 0.0) ? a.c + b.c : 0.0;
}

}  // namespace

TorsoPoints ExtractTorso(const KeypointRecord& record) {
  return {record.keypoints[kRightShoulder], record.keypoints[kLeftShoulder],
          record.keypoints[kRightHip], record.keypoints[kLeftHip]};
}

double S2tRatio(const TorsoPoints& t, double min_height) {
  const auto& rs = t.right_shoulder;
  const auto& ls = t.left_shoulder;
  const auto& rh = t.right_hip;
  const auto& lh = t.left_hip;

  const double mass = rs.c + ls.c + rh.c + lh.c;
  if (!(mass > 0.0)) {
    throw OrientationUnavailable("torso keypoints have zero confidence");
  }
  const double width = (PairWeight(rs, ls) * (rs.x - ls.x) +
                        PairWeight(rh, lh) * (rh.x - lh.x)) /
                       mass;
  const double height = (PairWeight(rs, rh) * (rh.y - rs.y) +
                         PairWeight(ls, lh) * (lh.y - ls.y)) /
                        mass;
  if (!(std::abs(height) >= min_height)) {
    throw OrientationUnavailable("degenerate torso height");
  }
  return width / height;
}

int OrientationBin(double s2t, int bins, double smax) {
  if (bins < 1) throw std::invalid_argument("bin count must be >= 1");
  if (!(smax > 0.0)) throw std::invalid_argument("smax must be positive");
  const double s = std::clamp(s2t, -smax, smax);
  const int bin =
      static_cast<int>(std::floor((s + smax) / (2.0 * smax) * bins));
  return std::clamp(bin, 0, bins - 1);
}

Orientation EstimateOrientation(const TorsoPoints& torso, int bins,
                                double smax) {
  try {
    const double s2t = S2tRatio(torso);
    return {s2t, OrientationBin(s2t, bins, smax), true};
  } catch (const OrientationUnavailable&) {
    return {0.0, FallbackBin(bins), false};
  }
}

}  // namespace ortrack
