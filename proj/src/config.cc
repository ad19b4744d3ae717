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

#include "ortrack/config.h"

#include <stdexcept>

#include "json.hpp"
#include "ortrack/errors.h"

namespace ortrack {
namespace {

using nlohmann::json;

json ParseObject(std::string_view text) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("config is not valid JSON: ") + e.what());
  }
  if (!obj.is_object()) throw ParseError(0, "config must be a JSON object");
  return obj;
}

template <typename T>
void Read(const json& obj, const char* key, T& field) {
  const auto it = obj.find(key);
  if (it == obj.end()) return;
  try {
    field = it->get<T>();
  } catch (const json::exception&) {
    throw ParseError(0, std::string("config key '") + key +
                            "' has the wrong type");
  }
}

void RejectUnknown(const json& obj,
                   std::initializer_list<std::string_view> known) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (auto k : known) ok = ok || key == k;
    if (!ok) throw ParseError(0, "unknown config key '" + key + "'");
  }
}

GalleryStrategy ParseGalleryStrategy(const std::string& name) {
  if (name == "full") return GalleryStrategy::kFull;
  if (name == "avg") return GalleryStrategy::kAveraged;
  if (name == "random") return GalleryStrategy::kRandomBins;
  if (name == "orient") return GalleryStrategy::kOrientationBins;
  throw ParseError(0, "unknown gallery '" + name +
                          "' (expected full, avg, random, orient)");
}

std::string GalleryStrategyName(GalleryStrategy s) {
  switch (s) {
    case GalleryStrategy::kFull:
      return "full";
    case GalleryStrategy::kAveraged:
      return "avg";
    case GalleryStrategy::kRandomBins:
      return "random";
    case GalleryStrategy::kOrientationBins:
      return "orient";
  }
  return "?";
}

}  // namespace

TrackerConfig ParseTrackerConfig(std::string_view text) {
  const json obj = ParseObject(text);
  RejectUnknown(obj, {"bins", "smax", "particles", "mode", "gallery", "q", "r",
                      "d0_pos", "d0_app", "confirm_hits", "max_age", "seed"});
  TrackerConfig c;
  Read(obj, "bins", c.bins);
  Read(obj, "smax", c.smax);
  Read(obj, "particles", c.particles);
  Read(obj, "q", c.q);
  Read(obj, "r", c.r);
  Read(obj, "d0_pos", c.d0_pos);
  Read(obj, "d0_app", c.d0_app);
  Read(obj, "confirm_hits", c.confirm_hits);
  Read(obj, "max_age", c.max_age);
  Read(obj, "seed", c.seed);
  std::string mode = AssociationModeName(c.mode);
  Read(obj, "mode", mode);
  std::string gallery = GalleryStrategyName(c.gallery);
  Read(obj, "gallery", gallery);
  try {
    c.mode = ParseAssociationMode(mode);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
  c.gallery = ParseGalleryStrategy(gallery);
  try {
    c.Validate();
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("config: ") + e.what());
  }
  return c;
}

std::string WriteTrackerConfig(const TrackerConfig& c) {
  json obj = {{"bins", c.bins},
              {"smax", c.smax},
              {"particles", c.particles},
              {"mode", AssociationModeName(c.mode)},
              {"gallery", GalleryStrategyName(c.gallery)},
              {"q", c.q},
              {"r", c.r},
              {"d0_pos", c.d0_pos},
              {"d0_app", c.d0_app},
              {"confirm_hits", c.confirm_hits},
              {"max_age", c.max_age},
              {"seed", c.seed}};
  return obj.dump(2) + "\n";
}

SynthConfig ParseSynthConfig(std::string_view text) {
  const json obj = ParseObject(text);
  RejectUnknown(obj, {"persons", "frames", "width", "height", "dim", "kappa",
                      "sigma", "sigma_det", "crossing", "seed", "speed",
                      "turn_rate"});
  SynthConfig c;
  Read(obj, "persons", c.persons);
  Read(obj, "frames", c.frames);
  Read(obj, "width", c.width);
  Read(obj, "height", c.height);
  Read(obj, "dim", c.dim);
  Read(obj, "kappa", c.kappa);
  Read(obj, "sigma", c.sigma);
  Read(obj, "sigma_det", c.sigma_det);
  Read(obj, "crossing", c.crossing);
  Read(obj, "seed", c.seed);
  Read(obj, "speed", c.speed);
  Read(obj, "turn_rate", c.turn_rate);
  try {
    c.Validate();
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("config: ") + e.what());
  }
  return c;
}

std::string WriteSynthConfig(const SynthConfig& c) {
  json obj = {{"persons", c.persons},     {"frames", c.frames},
              {"width", c.width},         {"height", c.height},
              {"dim", c.dim},             {"kappa", c.kappa},
              {"sigma", c.sigma},         {"sigma_det", c.sigma_det},
              {"crossing", c.crossing},   {"seed", c.seed},
              {"speed", c.speed},         {"turn_rate", c.turn_rate}};
  return obj.dump(2) + "\n";
}

}  // namespace ortrack
