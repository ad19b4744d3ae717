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

#ifndef ORTRACK_CONFIG_H_
#define ORTRACK_CONFIG_H_

#include <string>
#include <string_view>

#include "ortrack/synth.h"
#include "ortrack/tracker.h"

namespace ortrack {

// Config files are flat JSON objects. Absent keys keep their defaults;
// unknown keys and wrongly typed values raise ParseError.
//
// Tracker keys: bins, smax, particles, mode (PosOnly | AppOnly | PosApp),
// gallery (full | avg | random | orient), q, r, d0_pos, d0_app,
// confirm_hits, max_age, seed.
TrackerConfig ParseTrackerConfig(std::string_view text);
std::string WriteTrackerConfig(const TrackerConfig& config);

// Synth keys: persons, frames, width, height, dim, kappa, sigma, sigma_det,
// crossing, seed, speed, turn_rate.
SynthConfig ParseSynthConfig(std::string_view text);
std::string WriteSynthConfig(const SynthConfig& config);

}  // namespace ortrack

#endif  // ORTRACK_CONFIG_H_
