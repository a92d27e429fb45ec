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

#include <thread>

#include "gaen/attacker.hpp"
#include "gaen/device.hpp"

namespace gaen::attack {
namespace {

constexpr double kDay0 = 1592438400.0;
const Zone kHospital{-10, -10, 10, 10};
const Zone kFactory{90, -10, 110, 10};

radio::Sighting sighting_of(const beacon::BeaconFrame& f, double t, radio::Vec2 at) {
  return {beacon::AdvPayload::from(f.payload), f.mac, -50.0, t, at};
}

AttackPolicy hospital_policy() {
  AttackPolicy p;
  p.harvest_zones = {kHospital};
  p.target_zones = {kFactory};
  return p;
}

// Harvests one frame at `t` in the hospital and reports a factory deputy.
AttackerDb harvested_db(device::Device& carrier, double t, double report_t) {
  AttackerDb db;
  Deputy d{"hospital-dep", false};
  db.upload(*d.on_scan(sighting_of(*carrier.broadcast_current(t), t, {0, 0})));
  db.report({"factory-dep", {100, 0}, report_t});
  return db;
}

TEST(Deputy, HarvestsGaenOnlyUnlessCollectAll) {
  const Bytes ib = beacon::encode_decoy(beacon::IBeacon{});
  const radio::Sighting s{beacon::AdvPayload::from(ib), MacAddress{}, -40, 5, {1, 2}};
  EXPECT_FALSE(Deputy({"d", false}).on_scan(s).has_value());
  const auto rec = Deputy({"d", true}).on_scan(s);
  ASSERT_TRUE(rec.has_value());
  EXPECT_EQ(rec->frame.payload, ib);
  EXPECT_EQ(rec->location, (radio::Vec2{1, 2}));
  EXPECT_EQ(rec->deputy_id, "d");
}

TEST(AttackerDb, AssignsSequentialIdsAndIndexesGaen) {
  device::Device c("c", 1);
  AttackerDb db = harvested_db(c, kDay0, kDay0);
  Deputy d{"x", true};
  const Bytes ib = beacon::encode_decoy(beacon::IBeacon{});
  EXPECT_EQ(db.upload(*d.on_scan({beacon::AdvPayload::from(ib), {}, -1, 1, {}})), 1u);
  EXPECT_EQ(db.harvest().size(), 2u);
  EXPECT_EQ(db.gaen_index().size(), 1u);
}

TEST(AttackerDb, ConcurrentUploads) {
  AttackerDb db;
  device::Device c("c", 1);
  const auto frame = *c.broadcast_current(kDay0);
  std::vector<std::jthread> ts;
  for (int w = 0; w < 4; ++w) {
    ts.emplace_back([&db, &frame, w] {
      Deputy d{"d" + std::to_string(w), false};
      for (int i = 0; i < 500; ++i) db.upload(*d.on_scan(sighting_of(frame, kDay0 + i, {})));
    });
  }
  ts.clear();
  const auto snap = db.harvest_snapshot();
  ASSERT_EQ(snap.size(), 2000u);
  for (std::size_t i = 0; i < snap.size(); ++i) EXPECT_EQ(snap[i].id, i);
}

TEST(SelectRelays, FreshHospitalRpiGoesToFactoryDeputy) {
  device::Device c("c", 1);
  const AttackerDb db = harvested_db(c, kDay0 + 10, kDay0 + 600);
  const auto plan = select_relays(db, hospital_policy(), kDay0 + 610);
  ASSERT_EQ(plan.size(), 1u);
  EXPECT_EQ(plan[0].deputy_targets, std::vector<std::string>{"factory-dep"});
  EXPECT_EQ(plan[0].source_deputies, std::vector<std::string>{"hospital-dep"});
  EXPECT_DOUBLE_EQ(plan[0].emit_time, kDay0 + 615);
  EXPECT_EQ(plan[0].rpi, std::get<beacon::GaenBeacon>(db.harvest()[0].frame.kind).rpi);
}

TEST(SelectRelays, ThreeHourOldRpiIsDropped) {
  device::Device c("c", 1);
  const double now = kDay0 + 3 * 3600;
  const AttackerDb db = harvested_db(c, kDay0, now);
  EXPECT_TRUE(select_relays(db, hospital_policy(), now).empty());
}

TEST(SelectRelays, WindowEdgeIsInclusive) {
  device::Device c("c", 1);
  const AttackPolicy p = hospital_policy();
  // Interval [kDay0, kDay0 + 600); last emission allowed at kDay0 + 600 + 7200.
  const double t_ok = kDay0 + 7800 - p.relay_latency_s;
  EXPECT_EQ(select_relays(harvested_db(c, kDay0, t_ok), p, t_ok).size(), 1u);
  EXPECT_TRUE(select_relays(harvested_db(c, kDay0, t_ok + 1), p, t_ok + 1).empty());
}

TEST(SelectRelays, NoTargetsNoPlan) {
  device::Device c("c", 1);
  AttackerDb db = harvested_db(c, kDay0, kDay0);
  db.report({"factory-dep", {500, 500}, kDay0 + 1});  // left the factory
  EXPECT_TRUE(select_relays(db, hospital_policy(), kDay0 + 2).empty());
}

TEST(SelectRelays, StaleReportsAreIgnored) {
  device::Device c("c", 1);
  const AttackerDb db = harvested_db(c, kDay0, kDay0);
  const AttackPolicy p = hospital_policy();
  EXPECT_TRUE(select_relays(db, p, kDay0 + p.relay_latency_s + p.max_report_age_s + 1).empty());
}

TEST(SelectRelays, HarvestOutsideZonesIsIgnored) {
  device::Device c("c", 1);
  AttackerDb db;
  Deputy d{"elsewhere", false};
  db.upload(*d.on_scan(sighting_of(*c.broadcast_current(kDay0), kDay0, {50, 50})));
  db.report({"factory-dep", {100, 0}, kDay0});
  EXPECT_TRUE(select_relays(db, hospital_policy(), kDay0).empty());
}

TEST(SelectRelays, DelayAndDurationGateEmission) {
  device::Device c("c", 1);
  AttackPolicy p = hospital_policy();
  p.replay_delay_s = 3600;
  p.replay_duration_s = 600;
  auto at = [&](double t) { return select_relays(harvested_db(c, kDay0, t), p, t).size(); };
  EXPECT_EQ(at(kDay0 + 3600 - 6), 0u);
  EXPECT_EQ(at(kDay0 + 3600 - 5), 1u);
  EXPECT_EQ(at(kDay0 + 4200 - 6), 1u);
  EXPECT_EQ(at(kDay0 + 4200 - 5), 0u);
}

// Property: XOR tamper is an involution and commutes with decryption.
TEST(Tamper, MalleabilityProperty) {
  Rng r(8);
  for (int i = 0; i < 3000; ++i) {
    crypto::AemKey k;
    Block16 rpi;
    AemMask m, mask;
    r.fill(k.bytes);
    r.fill(rpi);
    r.fill(m);
    r.fill(mask);
    const auto c = crypto::encrypt_aem(k, rpi, crypto::Metadata::from_bytes(m)).ciphertext;
    ASSERT_EQ(tamper(tamper(c, mask), mask), c);
    ASSERT_EQ(crypto::decrypt_aem(k, rpi, {tamper(c, mask)}).to_bytes(), tamper(m, mask));
  }
}

TEST(Rebroadcast, EncodesGaenUnderGivenMac) {
  const MacAddress mac = MacAddress::parse("AB:B1:E9:9E:1B:BA");
  Block16 rpi{};
  rpi[0] = 7;
  const auto f = rebroadcast(mac, rpi, {1, 2, 3, 4});
  EXPECT_EQ(f.mac, mac);
  EXPECT_EQ(f.payload, beacon::encode_gaen(rpi, AemMask{1, 2, 3, 4}));
  EXPECT_EQ(std::get<beacon::GaenBeacon>(f.kind).rpi, rpi);
}

TEST(Reidentify, KeepsOnlyOwnIntervalSightings) {
  device::Device c("c", 1), other("o", 2);
  AttackerDb db;
  Deputy d{"dep", false};
  const auto f0 = *c.broadcast_current(kDay0 + 5);
  db.upload(*d.on_scan(sighting_of(f0, kDay0 + 5, {1, 1})));
  db.upload(*d.on_scan(sighting_of(*c.broadcast_current(kDay0 + 900), kDay0 + 900, {2, 2})));
  db.upload(*d.on_scan(sighting_of(f0, kDay0 + 2000, {3, 3})));  // a replay
  db.upload(*d.on_scan(sighting_of(*other.broadcast_current(kDay0 + 6), kDay0 + 6, {4, 4})));
  c.mark_infected();
  server::DiagnosisServer s;
  const auto teks = c.diagnose_and_upload(s, kDay0 + 3000);
  const auto dossiers = reidentify(db, teks);
  ASSERT_EQ(dossiers.size(), 1u);
  ASSERT_EQ(dossiers[0].sightings.size(), 2u);
  EXPECT_EQ(dossiers[0].sightings[0].location, (radio::Vec2{1, 1}));
  EXPECT_EQ(dossiers[0].sightings[1].location, (radio::Vec2{2, 2}));
}

TEST(Linkage, JoinsMacsToPersistentIds) {
  device::Device c("c", 1), other("o", 2);
  AttackerDb db;
  Deputy d{"dep", false};
  for (double t : {0.0, 1.0, 700.0}) {
    db.upload(*d.on_scan(sighting_of(*c.broadcast_current(kDay0 + t), kDay0 + t, {})));
    db.upload(*d.on_scan(sighting_of(*other.broadcast_current(kDay0 + t), kDay0 + t, {})));
  }
  const auto table = correlate_mac_rpi(db);
  ASSERT_EQ(table.size(), 4u);
  EXPECT_EQ(table[0].count, 2u);
  EXPECT_LE(table[0].first_seen, table[3].first_seen);
  const std::vector<SideDbEntry> side{{c.mac_history().front().mac, "ad-c"},
                                      {other.mac_history().front().mac, "ad-o"}};
  EXPECT_EQ(link_persistent_ids(*c.current_tek(), table, side),
            std::vector<std::string>{"ad-c"});
  EXPECT_EQ(link_persistent_ids(*other.current_tek(), table, side),
            std::vector<std::string>{"ad-o"});
}

TEST(AttackerServer, UploadsArriveAfterLatency) {
  AttackPolicy p = hospital_policy();
  p.relay_latency_s = 5;
  AttackerServer server(p);
  device::Device c("c", 1);
  Deputy d{"hospital-dep", false};
  server.receive_upload(*d.on_scan(sighting_of(*c.broadcast_current(kDay0), kDay0, {})), kDay0);
  server.receive_report({"factory-dep", {100, 0}, kDay0}, kDay0);
  server.advance(kDay0 + 4.9);
  EXPECT_TRUE(server.db().harvest().empty());
  EXPECT_TRUE(server.plan(kDay0 + 4.9).empty());
  server.advance(kDay0 + 5);
  ASSERT_EQ(server.db().harvest().size(), 1u);
  EXPECT_DOUBLE_EQ(server.db().harvest()[0].uploaded_at, kDay0 + 5);
  EXPECT_EQ(server.plan(kDay0 + 5).size(), 1u);
}

TEST(AttackerServer, EmittedAemAppliesMask) {
  AttackPolicy p = hospital_policy();
  p.tamper_mask = kTxPowerBit3Mask;
  AttackerServer s(p);
  RelayPlanEntry e;
  e.aem = {0x10, 0x20, 0x30, 0x40};
  EXPECT_EQ(s.emitted_aem(e), (AemMask{0x10, 0x28, 0x30, 0x40}));
  EXPECT_EQ(AttackerServer(hospital_policy()).emitted_aem(e), e.aem);
}

TEST(AttackPolicy, Validation) {
  AttackPolicy p;
  p.relay_latency_s = -1;
  EXPECT_THROW(validate(p), std::invalid_argument);
  p = {};
  p.target_zones = {{5, 5, 0, 0}};
  EXPECT_THROW(validate(p), std::invalid_argument);
}

}  // namespace
}  // namespace gaen::attack
