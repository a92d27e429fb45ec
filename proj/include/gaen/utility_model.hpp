// Copyright 2026 The gaen-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Coverage of contact events by the app versus by the attacker.
//
// A contact between two people is visible to the app only if both run it
// (probability alpha_sc^2 under uniform mixing). It is visible to the
// attacker if at least one of them carries a deputy SDK
// (1 - (1 - alpha_cd)^2), since one side can estimate distance alone.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gaen::utility {

struct PopulationModel {
  std::size_t n = 1'000'000;
  double alpha_sc = 0.0;
  double alpha_cd = 0.0;
  /// Number of uniformly random pairwise contacts sampled.
  std::size_t contacts = 100'000;
  double infected_fraction = 0.0;
  std::uint64_t seed = 0;
  /// Weight in [0, 1] given to contacts the attacker sees from one side only.
  double one_sided_quality = 1.0;
};

/// Throws std::invalid_argument for fractions outside [0, 1] or n < 2.
void validate(const PopulationModel& model);

struct CoverageReport {
  double alpha_sc = 0.0;
  double alpha_cd = 0.0;
  std::uint64_t seed = 0;
  std::size_t n_contacts = 0;
  std::size_t sc_detected = 0;
  std::size_t attacker_two_sided = 0;
  std::size_t attacker_one_sided = 0;
  double sc_coverage = 0.0;
  double attacker_coverage = 0.0;
  /// Realized share of individuals in the deputy group (the per-person view).
  double attacker_individual_coverage = 0.0;
};

CoverageReport simulate_coverage(const PopulationModel& model);

inline double expected_sc_coverage(double alpha_sc) { return alpha_sc * alpha_sc; }
inline double expected_attacker_coverage(double alpha_cd,
                                         double one_sided_quality = 1.0) {
  return alpha_cd * alpha_cd +
         one_sided_quality * 2.0 * alpha_cd * (1.0 - alpha_cd);
}

struct GridPoint {
  double alpha_sc = 0.0;
  double alpha_cd = 0.0;
};

/// steps x steps points evenly spaced on [0, 1] in both coordinates,
/// alpha_sc-major.
std::vector<GridPoint> make_grid(std::size_t steps);

/// One report per grid point. Point i uses seed base.seed + i, so results
/// do not depend on the thread count (0 = hardware concurrency).
std::vector<CoverageReport> sweep(const PopulationModel& base,
                                  std::span<const GridPoint> grid,
                                  unsigned threads = 0);

struct IndividualOutcome {
  bool infected = false;
  bool in_sc = false;
  bool in_cd = false;
  bool published = false;  // TEKs on the diagnosis server
  bool harvested = false;  // at least one published RPI in the attacker's db
};

struct EndToEndRun {
  std::vector<IndividualOutcome> people;
};

struct VisibilityReport {
  std::size_t infected = 0;
  std::size_t authority_known = 0;
  std::size_t attacker_known = 0;
  double authority_fraction = 0.0;
  double attacker_fraction = 0.0;
};

/// Health authority knows infected app users (they upload keys). The
/// attacker knows infected deputies plus infected users whose published
/// keys match something it harvested. Fractions are of all infected; both
/// are 0 when nobody is infected. Throws std::invalid_argument if the run
/// size differs from model.n.
VisibilityReport infected_visibility(const PopulationModel& model,
                                     const EndToEndRun& run);

/// Geometry for simulate_population(): people jump to a uniformly random
/// spot in a square every move_every_s seconds.
struct PopulationWorld {
  double area_m = 60.0;
  double duration_s = 1800.0;
  double tick_s = 10.0;
  double move_every_s = 300.0;
  double radio_range_m = 10.0;
  double start_time = 1592438400.0;
};

/// Full pipeline run (radio world, devices, deputies, diagnosis server,
/// reidentification). Membership uses per-person uniforms compared against
/// the alphas, so runs with the same seed and a larger alpha_sc contain the
/// smaller run's app users.
EndToEndRun simulate_population(const PopulationModel& model,
                                const PopulationWorld& world);

}  // namespace gaen::utility
