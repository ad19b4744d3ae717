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

#include "ortrack/association.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ortrack/errors.h"

namespace ortrack {
namespace {

constexpr double kMinLogFactor = -690.0;  // ~log(1e-300)

// exp(-d) per row, shifted by the row minimum before exponentiating so that
// large distances cannot underflow a whole row; the shift cancels in the
// normalization. Infinite distances become exact zeros.
AssociationMatrix SoftminRows(const Eigen::MatrixXd& dist) {
  AssociationMatrix a(dist.rows(), dist.cols());
  for (Eigen::Index i = 0; i < dist.rows(); ++i) {
    const double lo = dist.row(i).minCoeff();
    for (Eigen::Index j = 0; j < dist.cols(); ++j) {
      a(i, j) = std::isfinite(dist(i, j)) ? std::exp(-(dist(i, j) - lo)) : 0.0;
    }
  }
  NormalizeRows(a);
  return a;
}

}  // namespace

AssociationMode ParseAssociationMode(const std::string& text) {
  if (text == "PosOnly") return AssociationMode::kPosOnly;
  if (text == "AppOnly") return AssociationMode::kAppOnly;
  if (text == "PosApp") return AssociationMode::kPosApp;
  throw std::invalid_argument("unknown association mode '" + text +
                              "' (expected PosOnly, AppOnly, PosApp)");
}

std::string AssociationModeName(AssociationMode mode) {
  switch (mode) {
    case AssociationMode::kPosOnly:
      return "PosOnly";
    case AssociationMode::kAppOnly:
      return "AppOnly";
    case AssociationMode::kPosApp:
      return "PosApp";
  }
  return "?";
}

void NormalizeRows(AssociationMatrix& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    const double sum = a.row(i).sum();
    if (sum > 0.0 && std::isfinite(sum)) {
      a.row(i) /= sum;
    } else {
      a.row(i).setZero();
      a(i, a.cols() - 1) = 1.0;
    }
  }
}

AssociationMatrix PositionLikelihood(std::span<const TrackState> tracks,
                                     std::span<const Measurement> detections,
                                     const PositionLikelihoodParams& params) {
  const auto rows = static_cast<Eigen::Index>(detections.size());
  const auto cols = static_cast<Eigen::Index>(tracks.size()) + 1;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  Eigen::MatrixXd dist(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j + 1 < cols; ++j) {
      const double m = Mahalanobis(tracks[j], detections[i], params.r);
      dist(i, j) = m * m > params.gate ? kInf : m;
    }
    dist(i, cols - 1) = params.d0;
  }
  return SoftminRows(dist);
}

AssociationMatrix AppearanceLikelihood(const Gallery& gallery,
                                       std::span<const int> persons,
                                       std::span<const FeatureVector> features,
                                       double d0_app) {
  const auto rows = static_cast<Eigen::Index>(features.size());
  const auto cols = static_cast<Eigen::Index>(persons.size()) + 1;
  Eigen::MatrixXd dist(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (gallery.dim() != 0 && features[i].size() != gallery.dim()) {
      throw std::invalid_argument("detection feature dimension " +
                                  std::to_string(features[i].size()) +
                                  " != gallery " +
                                  std::to_string(gallery.dim()));
    }
    for (Eigen::Index j = 0; j + 1 < cols; ++j) {
      dist(i, j) = gallery.HasContent(persons[j])
                       ? gallery.MinDistance(persons[j], features[i])
                       : d0_app;
    }
    dist(i, cols - 1) = d0_app;
  }
  return SoftminRows(dist);
}

AssociationMatrix Combine(const AssociationMatrix& pos,
                          const AssociationMatrix& app, AssociationMode mode) {
  if (pos.rows() != app.rows() || pos.cols() != app.cols()) {
    throw std::invalid_argument("association matrices differ in shape");
  }
  switch (mode) {
    case AssociationMode::kPosOnly:
      return pos;
    case AssociationMode::kAppOnly:
      return app;
    case AssociationMode::kPosApp:
      break;
  }
  AssociationMatrix out = pos.cwiseProduct(app);
  NormalizeRows(out);
  return out;
}

ParticleSet ParticleSet::Uniform(int count) {
  if (count < 1) throw std::invalid_argument("particle count must be >= 1");
  ParticleSet set;
  set.particles.resize(count);
  for (auto& p : set.particles) p.weight = 1.0 / count;
  return set;
}

double ParticleSet::EffectiveSampleSize() const {
  double sq = 0.0;
  for (const auto& p : particles) sq += p.weight * p.weight;
  return sq > 0.0 ? 1.0 / sq : 0.0;
}

ParticleSet SystematicResample(const ParticleSet& particles,
                               std::mt19937_64& rng) {
  const std::size_t n = particles.size();
  ParticleSet out;
  out.particles.reserve(n);
  const double step = 1.0 / static_cast<double>(n);
  double u = std::uniform_real_distribution<double>(0.0, step)(rng);
  double cumulative = particles.particles[0].weight;
  std::size_t k = 0;
  for (std::size_t m = 0; m < n; ++m) {
    while (u > cumulative && k + 1 < n) {
      ++k;
      cumulative += particles.particles[k].weight;
    }
    Particle p = particles.particles[k];
    p.weight = step;
    out.particles.push_back(std::move(p));
    u += step;
  }
  return out;
}

RbpfResult RbpfStep(const ParticleSet& particles, const AssociationMatrix& a,
                    std::mt19937_64& rng, const RbpfOptions& options) {
  if (particles.size() == 0) {
    throw std::invalid_argument("particle set is empty");
  }
  const Eigen::Index rows = a.rows();
  const Eigen::Index new_col = a.cols() - 1;
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  RbpfResult result;
  result.particles = particles;
  std::vector<double> log_w(particles.size());
  std::vector<char> taken(static_cast<std::size_t>(std::max<Eigen::Index>(new_col, 0)));

  for (std::size_t p = 0; p < particles.size(); ++p) {
    Particle& particle = result.particles.particles[p];
    particle.assignment.assign(rows, static_cast<int>(new_col));
    std::fill(taken.begin(), taken.end(), 0);
    double log_factor = 0.0;
    for (Eigen::Index i = 0; i < rows; ++i) {
      double total = 0.0;
      for (Eigen::Index j = 0; j <= new_col; ++j) {
        if (j == new_col || !taken[j]) total += a(i, j);
      }
      Eigen::Index choice = new_col;
      if (total > 0.0) {
        if (options.greedy) {
          double best = -1.0;
          for (Eigen::Index j = 0; j <= new_col; ++j) {
            if ((j == new_col || !taken[j]) && a(i, j) > best) {
              best = a(i, j);
              choice = j;
            }
          }
        } else {
          const double target = unit(rng) * total;
          double acc = 0.0;
          for (Eigen::Index j = 0; j <= new_col; ++j) {
            if (j != new_col && taken[j]) continue;
            if (a(i, j) <= 0.0) continue;
            acc += a(i, j);
            choice = j;
            if (target < acc) break;
          }
        }
      }
      if (choice != new_col) taken[choice] = 1;
      particle.assignment[i] = static_cast<int>(choice);
      log_factor += std::max(kMinLogFactor, std::log(a(i, choice)));
    }
    particle.log_likelihood += log_factor;
    log_w[p] = std::log(std::max(particle.weight, 1e-300)) + log_factor;
  }

  const double max_log = *std::max_element(log_w.begin(), log_w.end());
  double total = 0.0;
  for (double& lw : log_w) {
    lw = std::exp(lw - max_log);
    total += lw;
  }
  std::size_t best = 0;
  for (std::size_t p = 0; p < log_w.size(); ++p) {
    result.particles.particles[p].weight = log_w[p] / total;
    if (log_w[p] > log_w[best]) best = p;
  }
  result.consensus = result.particles.particles[best].assignment;

  if (result.particles.EffectiveSampleSize() <
      0.5 * static_cast<double>(result.particles.size())) {
    result.particles = SystematicResample(result.particles, rng);
    result.resampled = true;
  }
  return result;
}

}  // namespace ortrack
