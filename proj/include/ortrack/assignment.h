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

#ifndef ORTRACK_ASSIGNMENT_H_
#define ORTRACK_ASSIGNMENT_H_

#include <vector>

#include <Eigen/Core>

namespace ortrack {

// Minimum-cost assignment on a rectangular cost matrix (Hungarian method
// with potentials, O(n^2 m)). Returns, for every row, the assigned column or
// -1; when rows > cols some rows stay unassigned. Costs must be finite.
std::vector<int> SolveMinCostAssignment(const Eigen::MatrixXd& cost);

// Same, maximizing the total of `score`.
std::vector<int> SolveMaxScoreAssignment(const Eigen::MatrixXd& score);

}  // namespace ortrack

#endif  // ORTRACK_ASSIGNMENT_H_
