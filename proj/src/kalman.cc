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

#include "ortrack/kalman.h"

#include <Eigen/Cholesky>
#include <Eigen/LU>
#include <cmath>

#include "ortrack/errors.h"

namespace ortrack {
namespace {

// Positive-definite solve of S x = b; fails on singular/indefinite S.
template <typename Rhs>
Rhs SolveInnovation(const MeasurementMatrix& S, const Rhs& b) {
  Eigen::LLT<MeasurementMatrix> llt(S);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("innovation covariance is not positive definite");
  }
  // LLT succeeds on nearly singular matrices; check conditioning via the
  // Cholesky diagonal.
  const Eigen::Vector4d diag = llt.matrixLLT().diagonal();
  if (diag.minCoeff() <= 1e-12 * std::max(1.0, diag.maxCoeff())) {
    throw NumericalError("innovation covariance is singular");
  }
  return llt.solve(b);
}

}  // namespace

Measurement MeasurementFromBox(const Box& box) {
  Measurement m;
  m.z << box.center_x(), box.center_y(), box.width, box.height;
  return m;
}

Box BoxFromState(const TrackState& state) {
  const auto& x = state.mean;
  return {x[0] - 0.5 * x[2], x[1] - 0.5 * x[3], x[2], x[3]};
}

TrackState InitialState(const Measurement& m) {
  TrackState s;
  s.mean.setZero();
  s.mean.head<4>() = m.z;
  s.cov.setZero();
  s.cov.diagonal() << 10, 10, 10, 10, 100, 100;
  return s;
}

StateVector ConstantVelocityModel::Propagate(const StateVector& x) const {
  StateVector out = x;
  out[0] += x[4];
  out[1] += x[5];
  return out;
}

StateMatrix ConstantVelocityModel::Jacobian(const StateVector&) const {
  StateMatrix F = StateMatrix::Identity();
  F(0, 4) = 1.0;
  F(1, 5) = 1.0;
  return F;
}

StateMatrix ProcessNoise(double q) {
  StateMatrix Q = StateMatrix::Zero();
  Q.diagonal() << 0.25, 0.25, 0.25, 0.25, 1.0, 1.0;
  return q * Q;
}

Eigen::Matrix<double, 4, 6> ObservationMatrix() {
  Eigen::Matrix<double, 4, 6> H = Eigen::Matrix<double, 4, 6>::Zero();
  H.leftCols<4>().setIdentity();
  return H;
}

TrackState Predict(const TrackState& s, double q) {
  return Predict(s, q, ConstantVelocityModel());
}

TrackState Predict(const TrackState& s, double q, const MotionModel& model) {
  const StateMatrix F = model.Jacobian(s.mean);
  TrackState out;
  out.mean = model.Propagate(s.mean);
  out.cov = F * s.cov * F.transpose() + ProcessNoise(q);
  out.cov = 0.5 * (out.cov + out.cov.transpose());
  return out;
}

MeasurementMatrix InnovationCovariance(const TrackState& s, double r) {
  const auto H = ObservationMatrix();
  MeasurementMatrix S = H * s.cov * H.transpose();
  S += r * MeasurementMatrix::Identity();
  return 0.5 * (S + S.transpose());
}

TrackState Update(const TrackState& s, const Measurement& m, double r) {
  const auto H = ObservationMatrix();
  const MeasurementMatrix S = InnovationCovariance(s, r);
  const MeasurementVector y = m.z - H * s.mean;
  // K = P H^T S^-1, computed as (S^-1 H P)^T since S and P are symmetric.
  const Eigen::Matrix<double, 4, 6> HP = H * s.cov;
  const Eigen::Matrix<double, 6, 4> K =
      SolveInnovation(S, HP).transpose();

  TrackState out;
  out.mean = s.mean + K * y;
  // Joseph form keeps the posterior symmetric positive semi-definite.
  const StateMatrix I_KH = StateMatrix::Identity() - K * H;
  out.cov = I_KH * s.cov * I_KH.transpose() +
            r * K * K.transpose();
  out.cov = 0.5 * (out.cov + out.cov.transpose());
  return out;
}

double Mahalanobis(const TrackState& s, const Measurement& m, double r) {
  const MeasurementMatrix S = InnovationCovariance(s, r);
  const MeasurementVector y = m.z - ObservationMatrix() * s.mean;
  const MeasurementVector x = SolveInnovation(S, y);
  return std::sqrt(std::max(0.0, y.dot(x)));
}

}  // namespace ortrack
