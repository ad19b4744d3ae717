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

#ifndef ORTRACK_KALMAN_H_
#define ORTRACK_KALMAN_H_

#include <Eigen/Core>

#include "ortrack/types.h"

namespace ortrack {

// (cx, cy, w, h, vx, vy) in px and px/frame.
using StateVector = Eigen::Matrix<double, 6, 1>;
using StateMatrix = Eigen::Matrix<double, 6, 6>;
// (cx, cy, w, h) in px.
using MeasurementVector = Eigen::Matrix<double, 4, 1>;
using MeasurementMatrix = Eigen::Matrix<double, 4, 4>;

struct TrackState {
  StateVector mean = StateVector::Zero();
  StateMatrix cov = StateMatrix::Identity();
};

struct Measurement {
  MeasurementVector z = MeasurementVector::Zero();
};

Measurement MeasurementFromBox(const Box& box);
Box BoxFromState(const TrackState& state);

// Zero velocity, cov = diag(10, 10, 10, 10, 100, 100).
TrackState InitialState(const Measurement& m);

// Motion model hook for the extended filter. Propagate() maps a state one
// frame forward; Jacobian() linearizes it at the given state.
class MotionModel {
 public:
  virtual ~MotionModel() = default;
  virtual StateVector Propagate(const StateVector& x) const = 0;
  virtual StateMatrix Jacobian(const StateVector& x) const = 0;
};

// cx += vx, cy += vy per frame; everything else constant.
class ConstantVelocityModel final : public MotionModel {
 public:
  StateVector Propagate(const StateVector& x) const override;
  StateMatrix Jacobian(const StateVector& x) const override;
};

// Q(q) = q * diag(0.25, 0.25, 0.25, 0.25, 1, 1).
StateMatrix ProcessNoise(double q);
// Selects (cx, cy, w, h) from the state.
Eigen::Matrix<double, 4, 6> ObservationMatrix();

TrackState Predict(const TrackState& s, double q);
TrackState Predict(const TrackState& s, double q, const MotionModel& model);

// Kalman update with R = r * I. Throws NumericalError if the innovation
// covariance is singular.
TrackState Update(const TrackState& s, const Measurement& m, double r);

// H * cov * H^T + r * I.
MeasurementMatrix InnovationCovariance(const TrackState& s, double r);

// sqrt(y^T S^-1 y) with y = z - H * mean. Throws NumericalError if S is
// singular.
double Mahalanobis(const TrackState& s, const Measurement& m, double r);

}  // namespace ortrack

#endif  // ORTRACK_KALMAN_H_
