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

#include "cli.h"

#include <algorithm>
#include <exception>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "CLI11.hpp"
#include "ortrack/config.h"
#include "ortrack/errors.h"
#include "ortrack/gallery.h"
#include "ortrack/io_formats.h"
#include "ortrack/metrics.h"
#include "ortrack/orientation.h"
#include "ortrack/synth.h"
#include "ortrack/tracker.h"

namespace ortrack::cli {
namespace {

// Raised for flag combinations CLI11 cannot express; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TrackArgs {
  std::string det, features, keypoints, config, out;
};

struct EvalReidArgs {
  std::string features, ids_from_mot, keypoints, mode, out;
  double split = 0.8;
  std::uint64_t seed = 0;
  double smax = 1.0;
  std::vector<int> sweep_bins;
};

struct EvalMotArgs {
  std::string gt, pred, out;
  double iou = kDefaultIouThreshold;
};

struct SynthArgs {
  std::string config, out_dir;
};

std::string ReadOptional(const std::string& path) {
  return path.empty() ? std::string() : ReadFile(path);
}

int DoTrack(const TrackArgs& a, std::ostream& out) {
  TrackerConfig config;
  if (!a.config.empty()) config = ParseTrackerConfig(ReadFile(a.config));
  const auto tracks = RunSequence(config, ReadFile(a.det),
                                  ReadOptional(a.features),
                                  ReadOptional(a.keypoints));
  WriteFile(a.out, WriteTracks(tracks));
  out << "wrote " << tracks.size() << " track records to " << a.out << "\n";
  return kExitOk;
}

// Joins MOT rows (ids) with features and, optionally, keypoints on
// (frame, det_index), where det_index counts rows within a frame.
LabeledFeatureSet LoadLabeledFeatures(const EvalReidArgs& a) {
  const auto rows = ParseMot(ReadFile(a.ids_from_mot));
  const FeatureTable features = ParseFeatures(ReadFile(a.features));
  std::map<std::pair<int, int>, TorsoPoints> torsos;
  if (!a.keypoints.empty()) {
    for (const auto& rec : ParseKeypoints(ReadFile(a.keypoints))) {
      torsos[{rec.frame, rec.det_index}] = ExtractTorso(rec);
    }
  }
  std::map<int, int> next_index;
  LabeledFeatureSet items;
  for (const auto& r : rows) {
    const int det_index = next_index[r.frame]++;
    if (r.id < 1) {
      throw ValidationError("identity row (frame " + std::to_string(r.frame) +
                            ", det_index " + std::to_string(det_index) +
                            ") has no id");
    }
    const FeatureVector* f = features.Find(r.frame, det_index);
    if (f == nullptr) {
      throw ValidationError("missing feature for (frame " +
                            std::to_string(r.frame) + ", det_index " +
                            std::to_string(det_index) + ")");
    }
    LabeledFeature item{r.id, *f, std::nullopt};
    if (const auto it = torsos.find({r.frame, det_index}); it != torsos.end()) {
      try {
        item.s2t = S2tRatio(it->second);
      } catch (const OrientationUnavailable&) {
      }
    }
    items.push_back(std::move(item));
  }
  return items;
}

int DoEvalReid(const EvalReidArgs& a, std::ostream& out) {
  GalleryOptions base;
  try {
    base = ParseGalleryMode(a.mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const bool binned = base.strategy == GalleryStrategy::kRandomBins ||
                      base.strategy == GalleryStrategy::kOrientationBins;
  if (!a.sweep_bins.empty() && !binned) {
    throw UsageError("--sweep-bins needs a random:B or orient:B mode");
  }
  if (base.strategy == GalleryStrategy::kOrientationBins &&
      a.keypoints.empty()) {
    throw UsageError("orient:B mode needs --keypoints");
  }
  for (int b : a.sweep_bins) {
    if (b < 1) throw UsageError("--sweep-bins values must be >= 1");
  }

  const LabeledFeatureSet items = LoadLabeledFeatures(a);
  const GalleryQuerySplit split = SplitGalleryQuery(items, a.split, a.seed);

  std::vector<int> bin_counts = a.sweep_bins;
  if (bin_counts.empty()) bin_counts.push_back(base.bins);
  std::vector<std::pair<std::string, double>> rows;
  rows.emplace_back("num_gallery", static_cast<double>(split.gallery.size()));
  rows.emplace_back("num_queries", static_cast<double>(split.query.size()));
  for (int bins : bin_counts) {
    GalleryOptions options = base;
    options.bins = bins;
    options.seed = a.seed;
    const Gallery gallery = BuildGallery(options, split.gallery, a.smax);
    std::string name = "rank1_" + GalleryModeName(options);
    std::replace(name.begin(), name.end(), ':', '_');
    rows.emplace_back(name, Rank1(gallery, split.query));
  }
  WriteFile(a.out, WriteMetricsCsv(rows));
  out << "wrote " << rows.size() << " metrics to " << a.out << "\n";
  return kExitOk;
}

int DoEvalMot(const EvalMotArgs& a, std::ostream& out) {
  if (!(a.iou > 0.0 && a.iou < 1.0)) {
    throw UsageError("--iou must lie in (0, 1)");
  }
  const auto gt = ParseMot(ReadFile(a.gt));
  const auto pred = ParseMot(ReadFile(a.pred));
  const MotScores s = Idf1(gt, pred, a.iou);
  WriteFile(a.out,
            WriteMetricsCsv({{"idf1", s.idf1},
                             {"idtp", static_cast<double>(s.idtp)},
                             {"idfp", static_cast<double>(s.idfp)},
                             {"idfn", static_cast<double>(s.idfn)},
                             {"id_switches",
                              static_cast<double>(s.id_switches)}}));
  out << "idf1=" << s.idf1 << " id_switches=" << s.id_switches << "\n";
  return kExitOk;
}

int DoSynth(const SynthArgs& a, std::ostream& out) {
  const SynthConfig config = ParseSynthConfig(ReadFile(a.config));
  WriteSynthFiles(Generate(config), a.out_dir);
  out << "wrote scenario to " << a.out_dir << "\n";
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Orientation-aware multi-object tracker and evaluation tools",
               "ortrack"};
  app.require_subcommand(1);

  TrackArgs track;
  auto* track_cmd = app.add_subcommand("track", "Track a detection sequence");
  track_cmd->add_option("--det", track.det, "MOT detection CSV")->required();
  track_cmd->add_option("--features", track.features, "Feature table");
  track_cmd->add_option("--keypoints", track.keypoints, "Keypoint JSON lines");
  track_cmd->add_option("--config", track.config, "Tracker config (JSON)");
  track_cmd->add_option("--out", track.out, "Output track CSV")->required();

  EvalReidArgs reid;
  auto* reid_cmd =
      app.add_subcommand("eval-reid", "Rank-1 re-identification accuracy");
  reid_cmd->add_option("--features", reid.features, "Feature table")
      ->required();
  reid_cmd->add_option("--ids-from-mot", reid.ids_from_mot,
                       "MOT CSV holding the identity of every feature row")
      ->required();
  reid_cmd->add_option("--mode", reid.mode, "full | avg | random:B | orient:B")
      ->required();
  reid_cmd->add_option("--split", reid.split, "Gallery fraction")
      ->capture_default_str();
  reid_cmd->add_option("--seed", reid.seed, "Split / random-bin seed")
      ->capture_default_str();
  reid_cmd->add_option("--sweep-bins", reid.sweep_bins,
                       "Comma-separated bin counts to sweep")
      ->delimiter(',');
  reid_cmd->add_option("--keypoints", reid.keypoints,
                       "Keypoint JSON lines (needed by orient:B)");
  reid_cmd->add_option("--smax", reid.smax, "S2T clamp bound")
      ->capture_default_str();
  reid_cmd->add_option("--out", reid.out, "Output metrics CSV")->required();

  EvalMotArgs mot;
  auto* mot_cmd = app.add_subcommand("eval-mot", "IDF1 and identity switches");
  mot_cmd->add_option("--gt", mot.gt, "Ground-truth MOT CSV")->required();
  mot_cmd->add_option("--pred", mot.pred, "Predicted track CSV")->required();
  mot_cmd->add_option("--iou", mot.iou, "IoU match threshold")
      ->capture_default_str();
  mot_cmd->add_option("--out", mot.out, "Output metrics CSV")->required();

  SynthArgs synth;
  auto* synth_cmd =
      app.add_subcommand("synth", "Generate a labeled synthetic scenario");
  synth_cmd->add_option("--config", synth.config, "Synth config (JSON)")
      ->required();
  synth_cmd->add_option("--out-dir", synth.out_dir, "Output directory")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (track_cmd->parsed()) return DoTrack(track, out);
    if (reid_cmd->parsed()) return DoEvalReid(reid, out);
    if (mot_cmd->parsed()) return DoEvalMot(mot, out);
    if (synth_cmd->parsed()) return DoSynth(synth, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitUsage;
}

}  // namespace ortrack::cli
