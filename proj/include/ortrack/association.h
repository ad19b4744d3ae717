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

#ifndef ORTRACK_ASSOCIATION_H_
#define ORTRACK_ASSOCIATION_H_

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "ortrack/gallery.h"
#include "ortrack/kalman.h"

namespace ortrack {

// Rows are detections; columns are the active tracks followed by one
// NEW_TRACK column. Every row of a finished matrix sums to one.
using AssociationMatrix = Eigen::MatrixXd;

inline Eigen::Index NewTrackColumn(const AssociationMatrix& a) {
  return a.cols() - 1;
}

enum class AssociationMode { kPosOnly, kAppOnly, kPosApp };

AssociationMode ParseAssociationMode(const std::string& text);
std::string AssociationModeName(AssociationMode mode);

// 95% chi-square quantile for 4 degrees of freedom.
inline constexpr double kChiSquareGate4 = 9.488;

struct PositionLikelihoodParams {
  double r = 10.0;        // measurement noise scale
  double d0 = 4.0;        // NEW_TRACK column is exp(-d0)
  double gate = kChiSquareGate4;  // on the squared Mahalanobis distance
};

// entry(i, j) = exp(-mahalanobis(track j, detection i)), zeroed when the
// squared distance exceeds the gate; rows normalized.
AssociationMatrix PositionLikelihood(std::span<const TrackState> tracks,
                                     std::span<const Measurement> detections,
                                     const PositionLikelihoodParams& params);

// entry(i, j) = exp(-gallery.MinDistance(persons[j], features[i])); persons
// without stored content get exp(-d0_app), as does the NEW_TRACK column.
// Rows normalized.
AssociationMatrix AppearanceLikelihood(const Gallery& gallery,
                                       std::span<const int> persons,
                                       std::span<const FeatureVector> features,
                                       double d0_app);

// kPosApp multiplies entry-wise and renormalizes rows; the other modes pass
// the corresponding matrix through.
AssociationMatrix Combine(const AssociationMatrix& pos,
                          const AssociationMatrix& app, AssociationMode mode);

// Normalizes rows in place; an all-zero row becomes (0, ..., 0, 1).
void NormalizeRows(AssociationMatrix& a);

// Column chosen for each detection row; the NEW_TRACK column may repeat,
// track columns may not.
using Assignment = std::vector<int>;

struct Particle {
  Assignment assignment;     // latest frame
  double log_likelihood = 0.0;  // accumulated over all frames
  double weight = 1.0;
};

struct ParticleSet {
  std::vector<Particle> particles;

  static ParticleSet Uniform(int count);
  std::size_t size() const { return particles.size(); }
  double EffectiveSampleSize() const;
};

struct RbpfOptions {
  // Take the most likely available column instead of sampling. With one
  // particle this is greedy sequential assignment.
  bool greedy = false;
};

struct RbpfResult {
  ParticleSet particles;
  Assignment consensus;
  bool resampled = false;
};

// Advances every particle by one frame: detections are visited in row order
// and each samples a column from its row restricted to the columns that
// particle has not yet taken (NEW_TRACK always stays available). The
// particle weight is multiplied by the sampled entries and weights are
// renormalized. The consensus is the assignment of the heaviest particle
// (lowest index on ties), taken before resampling. Systematic resampling
// runs when the effective sample size drops below half the particle count.
RbpfResult RbpfStep(const ParticleSet& particles, const AssociationMatrix& a,
                    std::mt19937_64& rng, const RbpfOptions& options = {});

// Systematic resampling; output weights are uniform.
ParticleSet SystematicResample(const ParticleSet& particles,
                               std::mt19937_64& rng);

}  // namespace ortrack

#endif  // ORTRACK_ASSOCIATION_H_
