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

#include "ortrack/synth.h"

#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>
#include <stdexcept>

namespace ortrack {
namespace {

constexpr double kPi = std::numbers::pi;

// Nominal person box, scaled per person.
constexpr double kBoxWidth = 40.0;
constexpr double kBoxHeight = 100.0;

// Torso layout relative to the box.
constexpr double kShoulderY = 0.25;
constexpr double kHipY = 0.55;
constexpr double kShoulderHalfWidth = 0.35;
constexpr double kHipHalfWidth = 0.25;

FeatureVector UnitGaussian(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  FeatureVector v(dim);
  do {
    for (int k = 0; k < dim; ++k) v[k] = normal(rng);
  } while (v.norm() == 0.0);
  return v.normalized();
}

struct Walker {
  double x = 0.0, y = 0.0;    // box center
  double vx = 0.0, vy = 0.0;  // px/frame
  double turn = 0.0;          // rad/frame
  double scale = 1.0;
  FeatureVector identity;
  FeatureVector quadrant[4];
};

double Yaw(double vx, double vy) { return std::atan2(vx, -vy); }

}  // namespace

void SynthConfig::Validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };
  require(persons >= 1, "persons must be >= 1");
  require(frames >= 1, "frames must be >= 1");
  require(width > 0.0 && height > 0.0, "image size must be positive");
  require(dim >= 2, "dim must be >= 2");
  require(kappa >= 0.0, "kappa must be >= 0");
  require(sigma >= 0.0, "sigma must be >= 0");
  require(sigma_det >= 0.0, "sigma_det must be >= 0");
  require(speed >= 0.0, "speed must be >= 0");
  require(std::isfinite(turn_rate), "turn_rate must be finite");
}

int Quadrant(double theta) {
  double wrapped = std::fmod(theta, 2.0 * kPi);
  if (wrapped < 0.0) wrapped += 2.0 * kPi;
  const int q = static_cast<int>(std::floor(wrapped / (kPi / 2.0)));
  return q > 3 ? 3 : q;
}

SynthData Generate(const SynthConfig& config) {
  config.Validate();
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> normal;

  const double cx = 0.5 * config.width;
  const double cy = 0.5 * config.height;
  std::vector<Walker> walkers(config.persons);
  for (int m = 0; m < config.persons; ++m) {
    Walker& w = walkers[m];
    w.scale = 0.9 + 0.2 * unit(rng);
    w.identity = UnitGaussian(config.dim, rng);
    for (auto& v : w.quadrant) v = UnitGaussian(config.dim, rng);
    if (config.crossing) {
      // Opposite borders in pairs: left/right, then top/bottom.
      const int side = m % 4;
      const double jitter = unit(rng) - 0.5;
      switch (side) {
        case 0:
          w.x = 0.0;
          w.y = cy + 0.2 * config.height * jitter;
          break;
        case 1:
          w.x = config.width;
          w.y = cy + 0.2 * config.height * jitter;
          break;
        case 2:
          w.x = cx + 0.2 * config.width * jitter;
          w.y = 0.0;
          break;
        default:
          w.x = cx + 0.2 * config.width * jitter;
          w.y = config.height;
          break;
      }
      const double mid = 0.5 * (config.frames + 1);
      const double arrival = std::max(
          2.0, mid + 0.05 * config.frames * (unit(rng) - 0.5));
      w.vx = (cx - w.x) / (arrival - 1.0);
      w.vy = (cy - w.y) / (arrival - 1.0);
    } else {
      w.x = config.width * (0.2 + 0.6 * unit(rng));
      w.y = config.height * (0.2 + 0.6 * unit(rng));
      const double phi = 2.0 * kPi * unit(rng);
      w.vx = config.speed * std::cos(phi);
      w.vy = config.speed * std::sin(phi);
      w.turn = unit(rng) < 0.5 ? config.turn_rate : -config.turn_rate;
    }
  }

  SynthData out;
  out.features.dim = config.dim;
  for (int frame = 1; frame <= config.frames; ++frame) {
    for (int m = 0; m < config.persons; ++m) {
      Walker& w = walkers[m];
      const double bw = kBoxWidth * w.scale;
      const double bh = kBoxHeight * w.scale;
      const Box gt_box{w.x - 0.5 * bw, w.y - 0.5 * bh, bw, bh};
      out.ground_truth.push_back({frame, m + 1, gt_box, 1.0});

      Box det_box = gt_box;
      if (config.sigma_det > 0.0) {
        det_box.left += config.sigma_det * normal(rng);
        det_box.top += config.sigma_det * normal(rng);
        det_box.width =
            std::max(1.0, det_box.width + config.sigma_det * normal(rng));
        det_box.height =
            std::max(1.0, det_box.height + config.sigma_det * normal(rng));
      }
      out.detections.push_back({frame, -1, det_box, 1.0});

      const double yaw = Yaw(w.vx, w.vy);
      const int quadrant = Quadrant(yaw);
      out.headings.push_back(yaw);
      out.quadrants.push_back(quadrant);

      FeatureVector g = w.identity + config.kappa * w.quadrant[quadrant];
      if (config.sigma > 0.0) {
        const double scale = config.sigma / std::sqrt(config.dim);
        for (int k = 0; k < config.dim; ++k) g[k] += scale * normal(rng);
      }
      out.features.entries.emplace(FeatureTable::Key{frame, m},
                                   g.normalized());

      KeypointRecord kp;
      kp.frame = frame;
      kp.det_index = m;
      const double kx = det_box.center_x();
      const double facing = std::cos(yaw);
      const double shoulder_y = det_box.top + kShoulderY * det_box.height;
      const double hip_y = det_box.top + kHipY * det_box.height;
      const double shoulder_dx = kShoulderHalfWidth * det_box.width * facing;
      const double hip_dx = kHipHalfWidth * det_box.width * facing;
      const double kp_noise = 0.25 * config.sigma_det;
      auto place = [&](int index, double x, double y) {
        if (kp_noise > 0.0) {
          x += kp_noise * normal(rng);
          y += kp_noise * normal(rng);
        }
        kp.keypoints[index] = {x, y, 0.5 + 0.5 * unit(rng)};
      };
      place(kRightShoulder, kx + shoulder_dx, shoulder_y);
      place(kLeftShoulder, kx - shoulder_dx, shoulder_y);
      place(kRightHip, kx + hip_dx, hip_y);
      place(kLeftHip, kx - hip_dx, hip_y);
      out.keypoints.push_back(kp);

      // Advance to the next frame.
      w.x += w.vx;
      w.y += w.vy;
      if (w.turn != 0.0) {
        const double c = std::cos(w.turn), s = std::sin(w.turn);
        const double vx = c * w.vx - s * w.vy;
        w.vy = s * w.vx + c * w.vy;
        w.vx = vx;
      }
    }
  }
  return out;
}

void WriteSynthFiles(const SynthData& data, const std::string& dir) {
  const std::filesystem::path root(dir);
  std::filesystem::create_directories(root);
  WriteFile((root / "gt.txt").string(), WriteTracks(data.ground_truth));
  WriteFile((root / "det.txt").string(), WriteDetections(data.detections));
  WriteFile((root / "features.csv").string(), WriteFeatures(data.features));
  WriteFile((root / "keypoints.jsonl").string(),
            WriteKeypoints(data.keypoints));
}

}  // namespace ortrack
