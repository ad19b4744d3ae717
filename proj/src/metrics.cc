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

#include "ortrack/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "ortrack/assignment.h"
#include "ortrack/errors.h"
#include "ortrack/orientation.h"

namespace ortrack {
namespace {

using FrameMap = std::map<int, std::vector<const DetectionRecord*>>;

FrameMap GroupByFrame(const std::vector<DetectionRecord>& records,
                      const char* side) {
  FrameMap frames;
  for (const auto& r : records) {
    if (r.id < 1) {
      throw ValidationError(std::string(side) + " record at frame " +
                            std::to_string(r.frame) + " has id < 1");
    }
    frames[r.frame].push_back(&r);
  }
  return frames;
}

void CheckThreshold(double iou_threshold) {
  if (!(iou_threshold > 0.0 && iou_threshold < 1.0)) {
    throw std::invalid_argument("IoU threshold must lie in (0, 1)");
  }
}

}  // namespace

GalleryQuerySplit SplitGalleryQuery(const LabeledFeatureSet& items,
                                    double gallery_fraction,
                                    std::uint64_t seed) {
  if (!(gallery_fraction > 0.0 && gallery_fraction < 1.0)) {
    throw std::invalid_argument("gallery fraction must lie in (0, 1)");
  }
  std::map<int, std::vector<std::size_t>> by_person;
  for (std::size_t k = 0; k < items.size(); ++k) {
    by_person[items[k].person].push_back(k);
  }
  std::mt19937_64 rng(seed);
  std::vector<char> in_gallery(items.size(), 1);
  for (auto& [person, idx] : by_person) {
    const auto n = static_cast<long>(idx.size());
    if (n < 2) continue;
    std::shuffle(idx.begin(), idx.end(), rng);
    const long keep = std::clamp(
        std::lround(gallery_fraction * static_cast<double>(n)), 1L, n - 1);
    for (long k = keep; k < n; ++k) in_gallery[idx[k]] = 0;
  }
  GalleryQuerySplit split;
  for (std::size_t k = 0; k < items.size(); ++k) {
    (in_gallery[k] ? split.gallery : split.query).push_back(items[k]);
  }
  return split;
}

Gallery BuildGallery(const GalleryOptions& options,
                     const LabeledFeatureSet& items, double smax) {
  Gallery gallery(options);
  const int bins = std::max(1, options.bins);
  for (const auto& item : items) {
    const int bin = item.s2t ? OrientationBin(*item.s2t, bins, smax)
                             : FallbackBin(bins);
    gallery.Insert(item.person, item.feature, bin);
  }
  return gallery;
}

double Rank1(const Gallery& gallery, const LabeledFeatureSet& queries) {
  if (queries.empty()) throw std::invalid_argument("no queries");
  std::size_t hits = 0;
  for (const auto& q : queries) {
    if (gallery.NearestPerson(q.feature).first == q.person) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(queries.size());
}

TrajectoryOverlaps CountTrajectoryOverlaps(
    const std::vector<DetectionRecord>& gt,
    const std::vector<DetectionRecord>& pred, double iou_threshold) {
  CheckThreshold(iou_threshold);
  const FrameMap gt_frames = GroupByFrame(gt, "ground-truth");
  const FrameMap pred_frames = GroupByFrame(pred, "predicted");

  TrajectoryOverlaps out;
  {
    std::set<int> g, p;
    for (const auto& r : gt) g.insert(r.id);
    for (const auto& r : pred) p.insert(r.id);
    out.gt_ids.assign(g.begin(), g.end());
    out.pred_ids.assign(p.begin(), p.end());
  }
  auto index_of = [](const std::vector<int>& ids, int id) {
    return std::lower_bound(ids.begin(), ids.end(), id) - ids.begin();
  };
  out.counts = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(out.gt_ids.size()),
                                     static_cast<Eigen::Index>(out.pred_ids.size()));
  for (const auto& [frame, gts] : gt_frames) {
    const auto it = pred_frames.find(frame);
    if (it == pred_frames.end()) continue;
    for (const DetectionRecord* g : gts) {
      for (const DetectionRecord* p : it->second) {
        if (Iou(g->box, p->box) >= iou_threshold) {
          out.counts(index_of(out.gt_ids, g->id),
                     index_of(out.pred_ids, p->id)) += 1.0;
        }
      }
    }
  }
  return out;
}

MotScores Idf1(const std::vector<DetectionRecord>& gt,
               const std::vector<DetectionRecord>& pred,
               double iou_threshold) {
  const TrajectoryOverlaps overlaps =
      CountTrajectoryOverlaps(gt, pred, iou_threshold);
  MotScores s;
  if (overlaps.counts.size() > 0) {
    const auto match = SolveMaxScoreAssignment(overlaps.counts);
    for (std::size_t a = 0; a < match.size(); ++a) {
      if (match[a] >= 0) {
        s.idtp += std::llround(overlaps.counts(static_cast<Eigen::Index>(a),
                                               match[a]));
      }
    }
  }
  s.idfn = static_cast<std::int64_t>(gt.size()) - s.idtp;
  s.idfp = static_cast<std::int64_t>(pred.size()) - s.idtp;
  const std::int64_t denom = 2 * s.idtp + s.idfp + s.idfn;
  s.idf1 = denom > 0 ? 2.0 * static_cast<double>(s.idtp) /
                           static_cast<double>(denom)
                     : 1.0;
  s.id_switches = IdSwitches(gt, pred, iou_threshold);
  return s;
}

std::int64_t IdSwitches(const std::vector<DetectionRecord>& gt,
                        const std::vector<DetectionRecord>& pred,
                        double iou_threshold) {
  CheckThreshold(iou_threshold);
  const FrameMap gt_frames = GroupByFrame(gt, "ground-truth");
  const FrameMap pred_frames = GroupByFrame(pred, "predicted");

  std::map<int, int> previous_frame;  // gt id -> track id, last frame only
  std::map<int, int> most_recent;     // gt id -> last matched track id
  std::int64_t switches = 0;

  for (const auto& [frame, gts] : gt_frames) {
    std::map<int, int> current;
    const auto it = pred_frames.find(frame);
    if (it != pred_frames.end()) {
      const auto& preds = it->second;
      const auto ng = static_cast<Eigen::Index>(gts.size());
      const auto np = static_cast<Eigen::Index>(preds.size());
      Eigen::MatrixXd iou(ng, np);
      for (Eigen::Index a = 0; a < ng; ++a) {
        for (Eigen::Index b = 0; b < np; ++b) {
          iou(a, b) = Iou(gts[a]->box, preds[b]->box);
        }
      }
      std::vector<char> gt_done(ng, 0), pred_done(np, 0);
      // Keep last frame's correspondences that still clear the threshold.
      for (Eigen::Index a = 0; a < ng; ++a) {
        const auto prev = previous_frame.find(gts[a]->id);
        if (prev == previous_frame.end()) continue;
        for (Eigen::Index b = 0; b < np; ++b) {
          if (!pred_done[b] && preds[b]->id == prev->second &&
              iou(a, b) >= iou_threshold) {
            gt_done[a] = pred_done[b] = 1;
            current[gts[a]->id] = preds[b]->id;
            break;
          }
        }
      }
      // Match the rest by maximum total IoU.
      std::vector<Eigen::Index> ga, pb;
      for (Eigen::Index a = 0; a < ng; ++a) if (!gt_done[a]) ga.push_back(a);
      for (Eigen::Index b = 0; b < np; ++b) if (!pred_done[b]) pb.push_back(b);
      if (!ga.empty() && !pb.empty()) {
        Eigen::MatrixXd score(static_cast<Eigen::Index>(ga.size()),
                              static_cast<Eigen::Index>(pb.size()));
        for (std::size_t x = 0; x < ga.size(); ++x) {
          for (std::size_t y = 0; y < pb.size(); ++y) {
            const double v = iou(ga[x], pb[y]);
            score(x, y) = v >= iou_threshold ? v : 0.0;
          }
        }
        const auto match = SolveMaxScoreAssignment(score);
        for (std::size_t x = 0; x < ga.size(); ++x) {
          if (match[x] < 0) continue;
          const Eigen::Index a = ga[x];
          const Eigen::Index b = pb[match[x]];
          if (iou(a, b) < iou_threshold) continue;
          current[gts[a]->id] = preds[b]->id;
        }
      }
    }
    for (const auto& [gt_id, track_id] : current) {
      const auto last = most_recent.find(gt_id);
      if (last != most_recent.end() && last->second != track_id) ++switches;
      most_recent[gt_id] = track_id;
    }
    previous_frame = std::move(current);
  }
  return switches;
}

std::string WriteMetricsCsv(
    const std::vector<std::pair<std::string, double>>& rows) {
  std::string out = "metric,value\n";
  for (const auto& [name, value] : rows) {
    char buf[64];
    if (value == std::floor(value) && std::abs(value) < 1e15) {
      std::snprintf(buf, sizeof(buf), "%.0f", value);
    } else {
      std::snprintf(buf, sizeof(buf), "%.6f", value);
    }
    out += name + "," + buf + "\n";
  }
  return out;
}

}  // namespace ortrack
