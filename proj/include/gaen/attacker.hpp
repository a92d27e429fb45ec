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

// Confused-deputy attack infrastructure.
//
// Deputies are ordinary phones whose embedded SDK scans for beacons and
// uploads what it hears together with the phone's location. The attacker
// server is somewhere on the Internet: it has no position in the simulated
// world and acts only on uploaded records. It picks harvested RPIs that are
// still inside the replay window and tells deputies standing in target
// zones to re-advertise them, optionally after XOR-ing a mask into the AEM.
//
// Nothing here touches key material until a TEK is published; reidentify()
// is the only consumer of published keys.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gaen/beacon_codec.hpp"
#include "gaen/crypto.hpp"
#include "gaen/diagnosis_server.hpp"
#include "gaen/radio_sim.hpp"

namespace gaen::attack {

using AemMask = std::array<std::uint8_t, 4>;

/// Axis-aligned rectangle, edges inclusive.
struct Zone {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;
  bool contains(const radio::Vec2& p) const {
    return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
  }
};

struct AttackPolicy {
  std::vector<Zone> harvest_zones;
  std::vector<Zone> target_zones;
  std::optional<AemMask> tamper_mask;
  /// One-way Internet hop between a deputy and the server.
  double relay_latency_s = 5.0;
  /// Earliest emission, measured from the start of the RPI's 10-minute
  /// interval (as the server infers it from the harvest time).
  double replay_delay_s = 0.0;
  /// Longest emission per RPI after replay_delay_s; 0 means until the
  /// replay window closes.
  double replay_duration_s = 0.0;
  /// Replay window the server assumes receivers apply, past the end of the
  /// RPI's interval.
  double replay_window_s = 7200.0;
  /// Deputy position reports older than this (after latency) are ignored.
  double max_report_age_s = 60.0;
  /// Harvest every beacon kind instead of GAEN frames only.
  bool collect_all = false;
};

/// Throws std::invalid_argument for negative latency/durations or inverted
/// zones.
void validate(const AttackPolicy& policy);

/// The default mask: flips bit 3 of the tx_power byte only.
inline constexpr AemMask kTxPowerBit3Mask = {0x00, 0x08, 0x00, 0x00};

struct HarvestRecord {
  std::uint64_t id = 0;  // assigned by AttackerDb::upload
  beacon::BeaconFrame frame;  // raw payload preserved byte-exact
  MacAddress mac;
  double rssi = 0.0;
  radio::Vec2 location;
  double time = 0.0;         // when the deputy heard it
  double uploaded_at = 0.0;  // when the server received it
  std::string deputy_id;
};

struct DeputyReport {
  std::string deputy_id;
  radio::Vec2 location;
  double time = 0.0;
};

/// A phone running the attacker's SDK.
struct Deputy {
  std::string id;
  bool collect_all = false;

  /// One hearing is enough: every GAEN frame (every frame with collect_all)
  /// becomes a record stamped with the deputy's location and time.
  std::optional<HarvestRecord> on_scan(const radio::Sighting& sighting) const;
};

/// Server-side store. upload() and report() may be called from many threads;
/// the const accessors return references and must not race with writers.
/// Use harvest_snapshot() for a consistent copy under concurrency.
class AttackerDb {
 public:
  AttackerDb() = default;
  AttackerDb(const AttackerDb& other);
  AttackerDb& operator=(const AttackerDb&) = delete;

  /// Assigns the next record id and returns it.
  std::uint64_t upload(HarvestRecord record);
  void report(const DeputyReport& report);
  void set_published(server::PublishedTekSet published);

  const std::vector<HarvestRecord>& harvest() const { return harvest_; }
  std::vector<HarvestRecord> harvest_snapshot() const;
  /// Indices into harvest() of GAEN records, grouped by RPI.
  const std::map<Block16, std::vector<std::size_t>>& gaen_index() const {
    return gaen_index_;
  }
  const std::map<std::string, DeputyReport>& deputies() const {
    return deputies_;
  }
  const server::PublishedTekSet& published() const { return published_; }

 private:
  mutable std::mutex mutex_;
  std::vector<HarvestRecord> harvest_;
  std::map<Block16, std::vector<std::size_t>> gaen_index_;
  std::map<std::string, DeputyReport> deputies_;
  server::PublishedTekSet published_;
};

struct RelayPlanEntry {
  Block16 rpi{};
  AemMask aem{};          // as harvested
  MacAddress mac;         // harvested MAC, reused for the replay
  double harvested_at = 0.0;
  double emit_time = 0.0;
  std::vector<std::uint64_t> source_records;
  std::vector<std::string> source_deputies;
  std::vector<std::string> deputy_targets;
};

/// RPIs heard inside a harvest zone whose age at emission (t + latency),
/// counted from the end of their 10-minute interval, is at most the replay
/// window, paired with the deputies last reported inside a target zone.
/// Entries without targets are dropped. Ordered by RPI.
std::vector<RelayPlanEntry> select_relays(const AttackerDb& db,
                                          const AttackPolicy& policy, double t);

/// aem XOR mask. Blind: no key is involved.
inline AemMask tamper(const AemMask& aem, const AemMask& mask) {
  return {static_cast<std::uint8_t>(aem[0] ^ mask[0]),
          static_cast<std::uint8_t>(aem[1] ^ mask[1]),
          static_cast<std::uint8_t>(aem[2] ^ mask[2]),
          static_cast<std::uint8_t>(aem[3] ^ mask[3])};
}

/// The frame a deputy puts on air for a relay: encode_gaen(rpi, aem) under
/// the attacker-chosen MAC.
beacon::BeaconFrame rebroadcast(const MacAddress& mac, const Block16& rpi,
                                const AemMask& aem);

struct DossierSighting {
  double time = 0.0;
  radio::Vec2 location;
  double rssi = 0.0;
  MacAddress mac;
  Block16 rpi{};
  std::string deputy_id;
  std::uint64_t record_id = 0;
};

struct Dossier {
  crypto::TemporaryExposureKey tek;
  std::vector<DossierSighting> sightings;  // chronological
};

/// One dossier per published TEK: every harvested GAEN record whose RPI is
/// one of the TEK's and whose harvest time falls inside that RPI's own
/// 10-minute interval (copies replayed later are not the person).
std::vector<Dossier> reidentify(
    const AttackerDb& db,
    std::span<const crypto::TemporaryExposureKey> published);

struct LinkageRow {
  MacAddress mac;
  Block16 rpi{};
  double first_seen = 0.0;
  double last_seen = 0.0;
  std::size_t count = 0;
};

/// (MAC, RPI) co-occurrence table over harvested GAEN records, ordered by
/// first_seen, then MAC, then RPI.
std::vector<LinkageRow> correlate_mac_rpi(const AttackerDb& db);

/// Third-party record tying a MAC address to a persistent identifier such as
/// an advertising ID.
struct SideDbEntry {
  MacAddress mac;
  std::string persistent_id;
};

/// Persistent IDs reachable from a published TEK: its RPIs -> linkage rows
/// -> MACs -> side database. Sorted, unique.
std::vector<std::string> link_persistent_ids(
    const crypto::TemporaryExposureKey& tek, std::span<const LinkageRow> table,
    std::span<const SideDbEntry> side_db);

/// The attacker's Internet-side endpoint. Holds no location: it learns about
/// the world only through delayed deputy uploads.
class AttackerServer {
 public:
  explicit AttackerServer(AttackPolicy policy);

  const AttackPolicy& policy() const { return policy_; }

  /// Queued until sent_at + relay_latency.
  void receive_upload(HarvestRecord record, double sent_at);
  void receive_report(DeputyReport report, double sent_at);

  /// Moves everything that has arrived by t into the database.
  void advance(double t);

  /// select_relays() on the current database.
  std::vector<RelayPlanEntry> plan(double t) const;

  /// The AEM a deputy transmits for an entry (tampered if a mask is set).
  AemMask emitted_aem(const RelayPlanEntry& entry) const;

  AttackerDb& db() { return db_; }
  const AttackerDb& db() const { return db_; }

 private:
  struct Pending {
    double arrives_at;
    std::uint64_t seq;
    std::optional<HarvestRecord> record;
    std::optional<DeputyReport> report;
  };

  AttackPolicy policy_;
  AttackerDb db_;
  std::vector<Pending> inbox_;
  std::uint64_t seq_ = 0;
};

}  // namespace gaen::attack
