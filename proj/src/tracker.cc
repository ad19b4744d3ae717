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

#include "ortrack/tracker.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "ortrack/errors.h"

namespace ortrack {

void TrackerConfig::Validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };
  require(bins >= 1, "bins must be >= 1");
  require(smax > 0.0, "smax must be positive");
  require(particles >= 1, "particles must be >= 1");
  require(q >= 0.0, "q must be non-negative");
  require(r > 0.0, "r must be positive");
  require(d0_pos > 0.0, "d0_pos must be positive");
  require(d0_app > 0.0, "d0_app must be positive");
  require(confirm_hits >= 1, "confirm_hits must be >= 1");
  require(max_age >= 0, "max_age must be non-negative");
  require(gate > 0.0, "gate must be positive");
}

GalleryOptions TrackerConfig::gallery_options() const {
  return {gallery, gallery == GalleryStrategy::kAveraged ? 1 : bins, seed};
}

Tracker::Tracker(TrackerConfig config)
    : config_(config),
      gallery_((config.Validate(), config.gallery_options())),
      particles_(ParticleSet::Uniform(config.particles)),
      rng_(config.seed) {}

bool Tracker::NeedsFeatures() const {
  return config_.mode != AssociationMode::kPosOnly;
}

bool Tracker::NeedsTorsos() const {
  return NeedsFeatures() &&
         config_.gallery == GalleryStrategy::kOrientationBins;
}

std::vector<DetectionRecord> Tracker::ProcessFrame(
    const FrameObservations& obs) {
  const std::size_t num_dets = obs.detections.size();
  auto missing = [&](const char* what, std::size_t i) {
    return ValidationError(std::string("missing ") + what + " for (frame " +
                           std::to_string(obs.frame) + ", det_index " +
                           std::to_string(i) + ")");
  };
  for (std::size_t i = 0; i < num_dets; ++i) {
    if (NeedsFeatures() && (i >= obs.features.size() || !obs.features[i])) {
      throw missing("feature", i);
    }
    if (NeedsTorsos() && (i >= obs.torsos.size() || !obs.torsos[i])) {
      throw missing("keypoints", i);
    }
  }

  // 1. Predict.
  std::vector<std::size_t> live;
  for (std::size_t k = 0; k < tracks_.size(); ++k) {
    if (tracks_[k].status == TrackStatus::kDead) continue;
    tracks_[k].state = Predict(tracks_[k].state, config_.q);
    live.push_back(k);
  }

  // 2. Likelihoods over live tracks plus the NEW_TRACK column.
  std::vector<TrackState> states;
  std::vector<int> ids;
  for (std::size_t k : live) {
    states.push_back(tracks_[k].state);
    ids.push_back(tracks_[k].track_id);
  }
  std::vector<Measurement> measurements;
  measurements.reserve(num_dets);
  for (const auto& d : obs.detections) {
    measurements.push_back(MeasurementFromBox(d.box));
  }
  const auto rows = static_cast<Eigen::Index>(num_dets);
  const auto cols = static_cast<Eigen::Index>(live.size()) + 1;
  const AssociationMatrix uniform =
      AssociationMatrix::Constant(rows, cols, 1.0 / static_cast<double>(cols));

  AssociationMatrix pos = uniform;
  if (config_.mode != AssociationMode::kAppOnly) {
    pos = PositionLikelihood(states, measurements,
                             {config_.r, config_.d0_pos, config_.gate});
  }
  AssociationMatrix app = uniform;
  if (config_.mode != AssociationMode::kPosOnly) {
    std::vector<FeatureVector> feats;
    feats.reserve(num_dets);
    for (std::size_t i = 0; i < num_dets; ++i) feats.push_back(*obs.features[i]);
    app = AppearanceLikelihood(gallery_, ids, feats, config_.d0_app);
  }
  const AssociationMatrix a = Combine(pos, app, config_.mode);

  // 3. Particle filter.
  RbpfResult step = RbpfStep(particles_, a, rng_);
  particles_ = std::move(step.particles);

  // 4-5. Apply the consensus assignment.
  std::vector<char> updated(tracks_.size(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> track_for_det;  // (track, det)
  for (std::size_t i = 0; i < num_dets; ++i) {
    const int col = step.consensus[i];
    std::size_t k = 0;
    if (col < static_cast<int>(live.size())) {
      k = live[col];
      Track& t = tracks_[k];
      t.state = Update(t.state, measurements[i], config_.r);
      ++t.hits;
      t.misses = 0;
    } else {
      Track t;
      t.track_id = next_id_++;
      t.state = InitialState(measurements[i]);
      t.hits = 1;
      k = tracks_.size();
      tracks_.push_back(t);
      updated.push_back(0);
    }
    Track& t = tracks_[k];
    if (t.status == TrackStatus::kTentative && t.hits >= config_.confirm_hits) {
      t.status = TrackStatus::kConfirmed;
    }
    updated[k] = 1;
    track_for_det.emplace_back(k, i);

    if (NeedsFeatures()) {
      int bin = 0;
      if (config_.gallery == GalleryStrategy::kOrientationBins) {
        bin = EstimateOrientation(*obs.torsos[i], config_.bins, config_.smax)
                  .bin;
      }
      gallery_.Insert(t.track_id, *obs.features[i], bin);
    }
  }
  for (std::size_t k : live) {
    if (updated[k]) continue;
    Track& t = tracks_[k];
    ++t.misses;
    if (t.misses > config_.max_age) t.status = TrackStatus::kDead;
  }

  // 6. Emit.
  std::vector<DetectionRecord> out;
  for (const auto& [k, i] : track_for_det) {
    const Track& t = tracks_[k];
    if (t.status != TrackStatus::kConfirmed) continue;
    out.push_back({obs.frame, t.track_id, BoxFromState(t.state),
                   obs.detections[i].conf});
  }
  std::sort(out.begin(), out.end(),
            [](const DetectionRecord& x, const DetectionRecord& y) {
              return x.id < y.id;
            });
  return out;
}

std::vector<DetectionRecord> RunSequence(const TrackerConfig& config,
                                         const std::string& detections_text,
                                         const std::string& features_text,
                                         const std::string& keypoints_text) {
  const auto detections = ParseMot(detections_text);
  std::optional<FeatureTable> features;
  if (!features_text.empty()) features = ParseFeatures(features_text);
  std::map<std::pair<int, int>, TorsoPoints> torsos;
  if (!keypoints_text.empty()) {
    for (const auto& rec : ParseKeypoints(keypoints_text)) {
      torsos[{rec.frame, rec.det_index}] = ExtractTorso(rec);
    }
  }

  std::map<int, std::vector<DetectionRecord>> by_frame;
  int last_frame = 0;
  for (const auto& d : detections) {
    by_frame[d.frame].push_back(d);
    last_frame = std::max(last_frame, d.frame);
  }

  Tracker tracker(config);
  std::vector<DetectionRecord> out;
  for (int frame = 1; frame <= last_frame; ++frame) {
    FrameObservations obs;
    obs.frame = frame;
    if (auto it = by_frame.find(frame); it != by_frame.end()) {
      obs.detections = std::move(it->second);
    }
    const int n = static_cast<int>(obs.detections.size());
    for (int i = 0; i < n; ++i) {
      if (features) {
        const FeatureVector* f = features->Find(frame, i);
        obs.features.push_back(f ? std::optional<FeatureVector>(*f)
                                 : std::nullopt);
      }
      if (!torsos.empty()) {
        const auto it = torsos.find({frame, i});
        obs.torsos.push_back(it != torsos.end()
                                 ? std::optional<TorsoPoints>(it->second)
                                 : std::nullopt);
      }
    }
    const auto emitted = tracker.ProcessFrame(obs);
    out.insert(out.end(), emitted.begin(), emitted.end());
  }
  return out;
}

}  // namespace ortrack
