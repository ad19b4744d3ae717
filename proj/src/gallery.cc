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

#include "ortrack/gallery.h"

#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "ortrack/errors.h"

namespace ortrack {

GalleryOptions ParseGalleryMode(const std::string& text) {
  GalleryOptions options;
  if (text == "full") {
    options.strategy = GalleryStrategy::kFull;
    options.bins = 1;
    return options;
  }
  if (text == "avg") {
    options.strategy = GalleryStrategy::kAveraged;
    options.bins = 1;
    return options;
  }
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  if ((head == "random" || head == "orient") && colon != std::string::npos) {
    const std::string count = text.substr(colon + 1);
    char* end = nullptr;
    const long bins = std::strtol(count.c_str(), &end, 10);
    if (count.empty() || *end != '\0' || bins < 1 || bins > 1000) {
      throw std::invalid_argument("bad bin count in gallery mode '" + text +
                                  "'");
    }
    options.strategy = head == "random" ? GalleryStrategy::kRandomBins
                                        : GalleryStrategy::kOrientationBins;
    options.bins = static_cast<int>(bins);
    return options;
  }
  throw std::invalid_argument("unknown gallery mode '" + text +
                              "' (expected full, avg, random:B, orient:B)");
}

std::string GalleryModeName(const GalleryOptions& options) {
  switch (options.strategy) {
    case GalleryStrategy::kFull:
      return "full";
    case GalleryStrategy::kAveraged:
      return "avg";
    case GalleryStrategy::kRandomBins:
      return "random:" + std::to_string(options.bins);
    case GalleryStrategy::kOrientationBins:
      return "orient:" + std::to_string(options.bins);
  }
  return "?";
}

Gallery::Gallery(GalleryOptions options)
    : options_(options), bin_rng_(options.seed) {
  if (options_.strategy == GalleryStrategy::kAveraged) options_.bins = 1;
  if ((options_.strategy == GalleryStrategy::kRandomBins ||
       options_.strategy == GalleryStrategy::kOrientationBins) &&
      options_.bins < 1) {
    throw std::invalid_argument("gallery bin count must be >= 1");
  }
}

int Gallery::slot_count() const {
  return options_.strategy == GalleryStrategy::kFull ? 0 : options_.bins;
}

void Gallery::CheckDim(const FeatureVector& feat) {
  if (feat.size() == 0) throw std::invalid_argument("empty feature vector");
  if (dim_ == 0) dim_ = static_cast<int>(feat.size());
  if (feat.size() != dim_) {
    throw std::invalid_argument("feature dimension " +
                                std::to_string(feat.size()) + " != gallery " +
                                std::to_string(dim_));
  }
}

void Gallery::Insert(int person, const FeatureVector& feat, int bin) {
  if (options_.strategy == GalleryStrategy::kOrientationBins &&
      (bin < 0 || bin >= options_.bins)) {
    throw std::invalid_argument("bin " + std::to_string(bin) +
                                " out of range [0," +
                                std::to_string(options_.bins) + ")");
  }
  CheckDim(feat);
  Entry& entry = entries_[person];
  if (options_.strategy == GalleryStrategy::kFull) {
    entry.history.push_back(feat);
    return;
  }
  if (entry.slots.empty()) entry.slots.resize(options_.bins);
  int target = 0;
  switch (options_.strategy) {
    case GalleryStrategy::kRandomBins:
      target = std::uniform_int_distribution<int>(0, options_.bins - 1)(
          bin_rng_);
      break;
    case GalleryStrategy::kOrientationBins:
      target = bin;
      break;
    default:
      break;
  }
  BinSlot& slot = entry.slots[target];
  if (slot.count == 0) {
    slot.mean = feat;
  } else {
    slot.mean += (feat - slot.mean) / static_cast<double>(slot.count + 1);
  }
  ++slot.count;
}

const Gallery::Entry* Gallery::FindEntry(int person) const {
  const auto it = entries_.find(person);
  return it == entries_.end() ? nullptr : &it->second;
}

bool Gallery::HasContent(int person) const {
  const Entry* e = FindEntry(person);
  if (e == nullptr) return false;
  if (!e->history.empty()) return true;
  for (const auto& s : e->slots) {
    if (!s.empty()) return true;
  }
  return false;
}

double Gallery::MinDistance(int person, const FeatureVector& feat) const {
  const Entry* e = FindEntry(person);
  if (e == nullptr) {
    throw NotFound("person " + std::to_string(person) + " not in gallery");
  }
  if (dim_ != 0 && feat.size() != dim_) {
    throw std::invalid_argument("query dimension " +
                                std::to_string(feat.size()) + " != gallery " +
                                std::to_string(dim_));
  }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& f : e->history) best = std::min(best, (feat - f).norm());
  for (const auto& s : e->slots) {
    if (!s.empty()) best = std::min(best, (feat - s.mean).norm());
  }
  if (best == std::numeric_limits<double>::infinity()) {
    throw NotFound("person " + std::to_string(person) +
                   " has no stored features");
  }
  return best;
}

std::pair<int, double> Gallery::NearestPerson(const FeatureVector& feat) const {
  std::pair<int, double> best{0, std::numeric_limits<double>::infinity()};
  bool found = false;
  // std::map iterates in ascending id, so strict < keeps the smallest id.
  for (const auto& [person, entry] : entries_) {
    if (!HasContent(person)) continue;
    const double d = MinDistance(person, feat);
    if (!found || d < best.second) {
      best = {person, d};
      found = true;
    }
  }
  if (!found) throw NotFound("gallery is empty");
  return best;
}

std::vector<int> Gallery::Persons() const {
  std::vector<int> ids;
  ids.reserve(entries_.size());
  for (const auto& [person, entry] : entries_) ids.push_back(person);
  return ids;
}

std::size_t Gallery::StoredVectors() const {
  std::size_t n = 0;
  for (const auto& [person, e] : entries_) {
    n += e.history.size();
    for (const auto& s : e.slots) n += s.empty() ? 0 : 1;
  }
  return n;
}

std::span<const FeatureVector> Gallery::History(int person) const {
  const Entry* e = FindEntry(person);
  if (e == nullptr) return {};
  return e->history;
}

std::span<const BinSlot> Gallery::Slots(int person) const {
  const Entry* e = FindEntry(person);
  if (e == nullptr) return {};
  return e->slots;
}

}  // namespace ortrack
