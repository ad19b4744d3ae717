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

#ifndef ORTRACK_TESTS_ORACLES_H_
#define ORTRACK_TESTS_ORACLES_H_

// Brute-force reference implementations used only by tests. They share no
// code with the library paths they check.

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "ortrack/io_formats.h"
#include "ortrack/metrics.h"

namespace ortrack::testing {

inline double OracleIou(const Box& a, const Box& b) {
  const double x0 = std::max(a.left, b.left);
  const double y0 = std::max(a.top, b.top);
  const double x1 = std::min(a.left + a.width, b.left + b.width);
  const double y1 = std::min(a.top + a.height, b.top + b.height);
  if (x1 <= x0 || y1 <= y0) return 0.0;
  const double inter = (x1 - x0) * (y1 - y0);
  return inter / (a.width * a.height + b.width * b.height - inter);
}

// Maximum identity true positives over every one-to-one pairing of GT and
// predicted trajectories, by permutation search on a padded square.
inline long BruteForceIdtp(const std::vector<DetectionRecord>& gt,
                           const std::vector<DetectionRecord>& pred,
                           double threshold) {
  std::vector<int> gt_ids, pred_ids;
  {
    std::set<int> g, p;
    for (const auto& r : gt) g.insert(r.id);
    for (const auto& r : pred) p.insert(r.id);
    gt_ids.assign(g.begin(), g.end());
    pred_ids.assign(p.begin(), p.end());
  }
  const std::size_t n = std::max(gt_ids.size(), pred_ids.size());
  std::vector<std::vector<long>> overlap(n, std::vector<long>(n, 0));
  for (std::size_t a = 0; a < gt_ids.size(); ++a) {
    for (std::size_t b = 0; b < pred_ids.size(); ++b) {
      for (const auto& g : gt) {
        if (g.id != gt_ids[a]) continue;
        for (const auto& p : pred) {
          if (p.id == pred_ids[b] && p.frame == g.frame &&
              OracleIou(g.box, p.box) >= threshold) {
            ++overlap[a][b];
          }
        }
      }
    }
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long best = 0;
  do {
    long total = 0;
    for (std::size_t a = 0; a < n; ++a) total += overlap[a][perm[a]];
    best = std::max(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Rank-1 by scanning every gallery item (full gallery semantics); ties go to
// the smallest person id.
inline double NaiveRank1(const LabeledFeatureSet& gallery,
                         const LabeledFeatureSet& queries) {
  long hits = 0;
  for (const auto& q : queries) {
    double best = std::numeric_limits<double>::infinity();
    int best_id = std::numeric_limits<int>::max();
    for (const auto& g : gallery) {
      double sq = 0.0;
      for (Eigen::Index k = 0; k < q.feature.size(); ++k) {
        const double d = q.feature[k] - g.feature[k];
        sq += d * d;
      }
      const double d = std::sqrt(sq);
      if (d < best || (d == best && g.person < best_id)) {
        best = d;
        best_id = g.person;
      }
    }
    hits += best_id == q.person;
  }
  return static_cast<double>(hits) / static_cast<double>(queries.size());
}

}  // namespace ortrack::testing

#endif  // ORTRACK_TESTS_ORACLES_H_
