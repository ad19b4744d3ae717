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

#ifndef ORTRACK_TYPES_H_
#define ORTRACK_TYPES_H_

#include <Eigen/Core>

namespace ortrack {

// d-dimensional appearance embedding of one detection.
using FeatureVector = Eigen::VectorXd;

// Axis-aligned image box, top-left anchored, in pixels.
struct Box {
  double left = 0.0;
  double top = 0.0;
  double width = 0.0;
  double height = 0.0;

  double center_x() const { return left + 0.5 * width; }
  double center_y() const { return top + 0.5 * height; }
  double area() const { return width * height; }

  friend bool operator==(const Box&, const Box&) = default;
};

// Intersection over union; 0 when either box is empty.
double Iou(const Box& a, const Box& b);

}  // namespace ortrack

#endif  // ORTRACK_TYPES_H_
