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

#include <gtest/gtest.h>

#include <algorithm>

#include "gaen/scenario.hpp"

namespace gaen::scenario {
namespace {

std::string scenario_path(const std::string& name) {
  return std::string(GAEN_SOURCE_DIR) + "/scenarios/" + name + ".json";
}

std::string minimal(const std::string& extra = "") {
  return R"({"schema_version": 1, "name": "t", "seed": 1,
             "world": {"tick": 1, "duration": 100})" +
         extra + "}";
}

void expect_config_error(const std::string& text, const std::string& field) {
  try {
    parse_config(text);
    FAIL() << "expected ConfigError mentioning " << field;
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find(field), std::string::npos) << e.what();
  }
}

TEST(Config, MinimalParses) {
  const auto c = parse_config(minimal());
  EXPECT_EQ(c.name, "t");
  EXPECT_EQ(c.world.tick, 1.0);
  EXPECT_DOUBLE_EQ(c.world.start_time, 1592438400.0);
  EXPECT_EQ(c.matching.sighting_duration_s, 1.0);
}

TEST(Config, ErrorsNameTheField) {
  expect_config_error(R"({"schema_version": 1, "name": "t", "world": {"tick": 1, "duration": 1}})",
                      "seed");
  expect_config_error(R"({"schema_version": 2, "name": "t", "seed": 1, "world": {}})",
                      "schema_version");
  expect_config_error(R"({"schema_version": 1, "name": "t", "seed": 1, "world": {"duration": 1}})",
                      "world.tick");
  expect_config_error(minimal(R"(, "nodes": [{"id": "a", "trajectory": [{"from": 0, "to": 1, "x": 0}]}])"),
                      "nodes[0].trajectory[0].y");
  expect_config_error(minimal(R"(, "attack": {"tamper_mask": "0011"})"), "attack.tamper_mask");
  expect_config_error(minimal(R"(, "attack": {"target_zones": [[1, 1, 0, 0]]})"),
                      "attack.target_zones[0]");
  expect_config_error("{not json", "JSON");
}

TEST(Config, CrossReferencesAreChecked) {
  const std::string node = R"(, "nodes": [{"id": "a", "trajectory": [{"from": 0, "to": 100, "x": 0, "y": 0}]}])";
  expect_config_error(minimal(node + R"(, "injections": [{"at": 1, "receiver": "zz",
      "payload_hex": "020106", "mac": "AB:B1:E9:9E:1B:BA", "rssi": -12}])"),
                      "zz");
  expect_config_error(
      minimal(R"(, "nodes": [{"id": "a", "infected_at": 5, "trajectory": []}])"),
      "does not run the app");
  expect_config_error(
      minimal(R"(, "nodes": [{"id": "a", "app": true, "infected_at": 500, "trajectory": []}])"),
      "outside the run");
  expect_config_error(minimal(node + R"(, "injections": [{"at": 1, "receiver": "a",
      "payload_hex": ")" + std::string(64, 'a') + R"(", "mac": "AB:B1:E9:9E:1B:BA", "rssi": -12}])"),
                      "31 bytes");
}

TEST(Config, CountReplicatesNodesWithOffsets) {
  const auto c = parse_config(minimal(R"(, "nodes": [{"id": "w", "count": 3, "dx": 2, "app": true,
      "advertising_id": "ad", "infected_at": 10,
      "trajectory": [{"from": 0, "to": 50, "x": 1, "y": 1}]}])"));
  ASSERT_EQ(c.world.nodes.size(), 3u);
  EXPECT_EQ(c.world.nodes[0].id, "w-01");
  EXPECT_EQ(c.world.nodes[2].id, "w-03");
  EXPECT_DOUBLE_EQ(c.world.nodes[2].trajectory[0].pos.x, 5.0);
  EXPECT_EQ(c.advertising_id.at("w-02"), "ad-02");
  EXPECT_EQ(c.infected_at.size(), 3u);
}

TEST(Config, BundledScenariosAllLoad) {
  for (const char* n : {"baseline_no_attack", "lazy_student", "hospital_replay", "targeted_replay",
                        "reidentification", "tamper_range_extension", "coverage_sweep"}) {
    EXPECT_NO_THROW(load_config(scenario_path(n))) << n;
  }
  EXPECT_THROW(load_config(scenario_path("nope")), ConfigError);
}

TEST(Run, BaselineHasNoFalsePositives) {
  const auto r = run(load_config(scenario_path("baseline_no_attack")));
  ASSERT_EQ(r.notifications.size(), 1u);
  EXPECT_EQ(r.notifications[0].device_id, "bob");
  EXPECT_EQ(r.notifications[0].tek_owner, "alice");
  EXPECT_TRUE(r.notifications[0].ground_truth_contact);
  EXPECT_TRUE(r.decisions.empty());
  EXPECT_TRUE(r.relay_emissions.empty());
}

TEST(Run, HospitalReplayProducesFalsePositives) {
  const auto r = run(load_config(scenario_path("hospital_replay")));
  ASSERT_FALSE(r.notifications.empty());
  EXPECT_TRUE(std::none_of(r.notifications.begin(), r.notifications.end(),
                           [](const NotificationRow& n) { return n.ground_truth_contact; }));
}

TEST(Run, InjectedSentinelBeaconsReachScanners) {
  const std::string text = minimal(R"(,
    "nodes": [{"id": "dep", "deputy": true, "trajectory": [{"from": 0, "to": 100, "x": 0, "y": 0}]}],
    "attack": {"collect_all": true},
    "injections": [
      {"at": 3, "receiver": "dep", "mac": "AB:B1:E6:6E:1B:BA", "rssi": -12,
       "payload_hex": "0201061aff4c00021501022022fa0f010000acdd1c6502da1cd0e7a64bc5"},
      {"at": 4, "receiver": "dep", "mac": "AB:B1:E9:9E:1B:BA", "rssi": -12,
       "payload_hex": "02011a03036ffd17166ffdf252a8a76c6012a86337d54f914b53b51b4d3c2a"}])");
  const auto r = run(parse_config(text));
  ASSERT_EQ(r.harvest.size(), 2u);
  EXPECT_EQ(r.harvest[0].mac.to_string(), "AB:B1:E6:6E:1B:BA");
  EXPECT_EQ(r.harvest[0].rssi, -12.0);
  EXPECT_EQ(beacon::kind_name(r.harvest[0].frame.kind), "ibeacon");
  EXPECT_EQ(beacon::kind_name(r.harvest[1].frame.kind), "gaen");
  EXPECT_EQ(r.events.size(), 2u);
}

TEST(Run, AttackerNeverAppearsAsANode) {
  const auto r = run(load_config(scenario_path("lazy_student")));
  for (const auto& e : r.relay_emissions) {
    EXPECT_NE(std::find(r.deputy_ids.begin(), r.deputy_ids.end(), e.deputy_id),
              r.deputy_ids.end());
  }
  EXPECT_FALSE(r.relay_emissions.empty());
}

}  // namespace
}  // namespace gaen::scenario
