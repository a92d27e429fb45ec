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

// Scenario configuration and the end-to-end runner. The JSON schema is
// documented in docs/scenario_schema.md.

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaen/attacker.hpp"
#include "gaen/device.hpp"
#include "gaen/diagnosis_server.hpp"
#include "gaen/radio_sim.hpp"
#include "gaen/utility_model.hpp"

namespace gaen::scenario {

inline constexpr int kSchemaVersion = 1;

/// Invalid scenario file. what() names the offending field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Injection {
  double at = 0.0;  // relative seconds
  std::string receiver;
  Bytes payload;
  MacAddress mac;
  double rssi = 0.0;
};

struct CoverageSweepConfig {
  std::size_t grid_steps = 11;
  std::size_t population = 1'000'000;
  std::size_t contacts = 100'000;
  double one_sided_quality = 1.0;
  std::uint64_t seed = 0;
};

struct VisibilitySweepConfig {
  std::vector<double> alpha_sc;
  double alpha_cd = 0.2;
  double infected_fraction = 0.3;
  std::size_t population = 60;
  std::size_t seeds = 5;
  std::uint64_t seed = 0;
  utility::PopulationWorld world;
};

struct ScenarioConfig {
  int schema_version = kSchemaVersion;
  std::string name;
  std::uint64_t seed = 0;
  radio::WorldConfig world;
  /// Relative time of diagnosis and key upload, per node id.
  std::map<std::string, double> infected_at;
  /// Persistent identifiers (e.g. advertising IDs), per node id.
  std::map<std::string, std::string> advertising_id;
  std::optional<attack::AttackPolicy> attack;
  device::MatchingParams matching;
  std::vector<Injection> injections;
  std::optional<CoverageSweepConfig> coverage;
  std::optional<VisibilitySweepConfig> visibility;
  std::string output_dir;
};

/// Parses and validates. Throws ConfigError.
ScenarioConfig parse_config(const std::string& json_text);
ScenarioConfig load_config(const std::filesystem::path& path);

/// Checks cross-references (node ids, times within the run). Throws
/// ConfigError.
void validate(const ScenarioConfig& config);

struct NotificationRow {
  std::string device_id;
  crypto::TemporaryExposureKey tek;
  std::string tek_owner;  // ground truth
  crypto::IntervalNumber day = 0;
  double duration_s = 0.0;
  double min_attenuation_db = 0.0;
  bool ground_truth_contact = false;
};

struct PlanDecision {
  double t = 0.0;
  attack::RelayPlanEntry entry;
  attack::AemMask emitted_aem{};
};

struct RelayEmission {
  double t = 0.0;
  std::string deputy_id;
  Block16 rpi{};
  attack::AemMask aem{};
  MacAddress mac;
};

struct IdentityLink {
  crypto::TemporaryExposureKey tek;
  std::string owner;  // ground truth
  std::vector<std::string> persistent_ids;
};

struct VisibilityRow {
  double alpha_sc = 0.0;
  double alpha_cd = 0.0;
  std::uint64_t seed = 0;
  utility::VisibilityReport report;
};

struct ScenarioResult {
  ScenarioConfig config;
  std::vector<std::string> node_ids;
  std::vector<radio::ScanEvent> events;
  std::vector<NotificationRow> notifications;
  server::PublishedTekSet published;
  std::map<std::string, std::vector<crypto::TemporaryExposureKey>> published_by;
  std::vector<attack::HarvestRecord> harvest;
  std::vector<PlanDecision> decisions;
  std::vector<RelayEmission> relay_emissions;
  std::vector<attack::Dossier> dossiers;
  std::vector<attack::LinkageRow> linkage;
  std::vector<attack::SideDbEntry> side_db;
  std::vector<IdentityLink> identity_links;
  std::map<std::string, std::vector<device::MacEpoch>> mac_ground_truth;
  std::vector<utility::CoverageReport> coverage;
  std::vector<VisibilityRow> visibility;
  /// Deputy node ids; the attacker server itself never appears in the world.
  std::vector<std::string> deputy_ids;
};

/// Runs the world simulation (when the config has nodes) followed by the
/// coverage and visibility sweeps (when configured). Deterministic.
ScenarioResult run(const ScenarioConfig& config);

/// Only the coverage/visibility part of a config.
ScenarioResult run_sweep(const ScenarioConfig& config);

}  // namespace gaen::scenario
