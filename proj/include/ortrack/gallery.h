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

#ifndef ORTRACK_GALLERY_H_
#define ORTRACK_GALLERY_H_

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ortrack/types.h"

namespace ortrack {

enum class GalleryStrategy { kFull, kAveraged, kRandomBins, kOrientationBins };

struct GalleryOptions {
  GalleryStrategy strategy = GalleryStrategy::kOrientationBins;
  int bins = 2;            // ignored by kFull and kAveraged
  std::uint64_t seed = 0;  // kRandomBins only
};

// Parses "full", "avg", "random:B" or "orient:B".
GalleryOptions ParseGalleryMode(const std::string& text);
std::string GalleryModeName(const GalleryOptions& options);

// Running mean of every feature inserted into one bin.
struct BinSlot {
  FeatureVector mean;
  std::int64_t count = 0;

  bool empty() const { return count == 0; }
};

// Per-person appearance store.
//
// kFull keeps every inserted feature (O(M*N) memory for M people over N
// frames). The binned strategies keep one running average per bin, so memory
// is O(M*B): kAveraged is a single bin, kRandomBins assigns each feature to a
// bin drawn from its own seeded generator, and kOrientationBins uses the bin
// supplied by the caller.
//
// Not thread-safe for writes; const queries may run concurrently.
class Gallery {
 public:
  explicit Gallery(GalleryOptions options = {});

  const GalleryOptions& options() const { return options_; }
  // Slots per person (1 for kAveraged, 0 for kFull).
  int slot_count() const;
  int dim() const { return dim_; }

  // `bin` is validated and used only by kOrientationBins.
  // Throws std::invalid_argument on dimension mismatch or bad bin.
  void Insert(int person, const FeatureVector& feat, int bin = 0);

  // Euclidean distance to the nearest stored feature (kFull) or nearest
  // non-empty slot mean. Throws NotFound for unknown or empty persons.
  double MinDistance(int person, const FeatureVector& feat) const;

  // Person with the smallest MinDistance; ties go to the smallest id.
  // Throws NotFound on an empty gallery.
  std::pair<int, double> NearestPerson(const FeatureVector& feat) const;

  bool HasContent(int person) const;
  std::vector<int> Persons() const;

  // Stored vectors across all persons (non-empty slots for binned modes).
  std::size_t StoredVectors() const;

  std::span<const FeatureVector> History(int person) const;  // kFull
  std::span<const BinSlot> Slots(int person) const;          // binned

 private:
  struct Entry {
    std::vector<FeatureVector> history;
    std::vector<BinSlot> slots;
  };

  void CheckDim(const FeatureVector& feat);
  const Entry* FindEntry(int person) const;

  GalleryOptions options_;
  int dim_ = 0;  // fixed by the first insert
  std::map<int, Entry> entries_;
  std::mt19937_64 bin_rng_;
};

}  // namespace ortrack

#endif  // ORTRACK_GALLERY_H_
