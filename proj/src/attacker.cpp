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

#include "gaen/attacker.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

namespace gaen::attack {

void validate(const AttackPolicy& policy) {
  if (policy.relay_latency_s < 0.0) {
    throw std::invalid_argument("relay_latency must be >= 0");
  }
  if (policy.replay_delay_s < 0.0 || policy.replay_duration_s < 0.0 ||
      policy.replay_window_s < 0.0 || policy.max_report_age_s < 0.0) {
    throw std::invalid_argument("attack timing parameters must be >= 0");
  }
  for (const auto* zones : {&policy.harvest_zones, &policy.target_zones}) {
    for (const Zone& z : *zones) {
      if (z.x1 < z.x0 || z.y1 < z.y0) {
        throw std::invalid_argument("zone corners are inverted");
      }
    }
  }
}

std::optional<HarvestRecord> Deputy::on_scan(
    const radio::Sighting& sighting) const {
  beacon::BeaconFrame frame =
      beacon::decode(sighting.payload.bytes(), sighting.mac);
  if (!collect_all && !std::holds_alternative<beacon::GaenBeacon>(frame.kind)) {
    return std::nullopt;
  }
  HarvestRecord r;
  r.frame = std::move(frame);
  r.mac = sighting.mac;
  r.rssi = sighting.rssi;
  r.location = sighting.rx_location;
  r.time = sighting.time;
  r.deputy_id = id;
  return r;
}

AttackerDb::AttackerDb(const AttackerDb& other) {
  std::lock_guard lock(other.mutex_);
  harvest_ = other.harvest_;
  gaen_index_ = other.gaen_index_;
  deputies_ = other.deputies_;
  published_ = other.published_;
}

std::uint64_t AttackerDb::upload(HarvestRecord record) {
  std::lock_guard lock(mutex_);
  record.id = harvest_.size();
  const std::size_t index = harvest_.size();
  if (const auto* g = std::get_if<beacon::GaenBeacon>(&record.frame.kind)) {
    gaen_index_[g->rpi].push_back(index);
  }
  harvest_.push_back(std::move(record));
  return index;
}

void AttackerDb::report(const DeputyReport& report) {
  std::lock_guard lock(mutex_);
  auto& slot = deputies_[report.deputy_id];
  if (report.time >= slot.time || slot.deputy_id.empty()) slot = report;
}

void AttackerDb::set_published(server::PublishedTekSet published) {
  std::lock_guard lock(mutex_);
  published_ = std::move(published);
}

std::vector<HarvestRecord> AttackerDb::harvest_snapshot() const {
  std::lock_guard lock(mutex_);
  return harvest_;
}

std::vector<RelayPlanEntry> select_relays(const AttackerDb& db,
                                          const AttackPolicy& policy,
                                          double t) {
  std::vector<std::string> targets;
  for (const auto& [id, rep] : db.deputies()) {
    if (t - rep.time > policy.relay_latency_s + policy.max_report_age_s) continue;
    const bool inside =
        std::any_of(policy.target_zones.begin(), policy.target_zones.end(),
                    [&](const Zone& z) { return z.contains(rep.location); });
    if (inside) targets.push_back(id);
  }
  if (targets.empty()) return {};

  const double emit = t + policy.relay_latency_s;
  std::vector<RelayPlanEntry> plan;
  for (const auto& [rpi, indices] : db.gaen_index()) {
    RelayPlanEntry entry;
    bool have_source = false;
    for (std::size_t idx : indices) {
      const HarvestRecord& r = db.harvest()[idx];
      const bool in_zone =
          std::any_of(policy.harvest_zones.begin(), policy.harvest_zones.end(),
                      [&](const Zone& z) { return z.contains(r.location); });
      if (!in_zone) continue;
      if (!have_source || r.time < entry.harvested_at) {
        const auto& g = std::get<beacon::GaenBeacon>(r.frame.kind);
        entry.aem = g.aem;
        entry.mac = r.mac;
        entry.harvested_at = r.time;
      }
      have_source = true;
      entry.source_records.push_back(r.id);
      entry.source_deputies.push_back(r.deputy_id);
    }
    if (!have_source) continue;

    const double interval_start =
        std::floor(entry.harvested_at / crypto::kIntervalSeconds) *
        crypto::kIntervalSeconds;
    const double interval_end = interval_start + crypto::kIntervalSeconds;
    // Age is counted from the end of the RPI's legitimate broadcast period.
    if (emit - interval_end > policy.replay_window_s) continue;
    const double first_emit = interval_start + policy.replay_delay_s;
    if (emit < first_emit) continue;
    if (policy.replay_duration_s > 0.0 &&
        emit >= first_emit + policy.replay_duration_s) {
      continue;
    }

    std::sort(entry.source_deputies.begin(), entry.source_deputies.end());
    entry.source_deputies.erase(
        std::unique(entry.source_deputies.begin(), entry.source_deputies.end()),
        entry.source_deputies.end());
    entry.rpi = rpi;
    entry.emit_time = emit;
    entry.deputy_targets = targets;
    plan.push_back(std::move(entry));
  }
  return plan;
}

beacon::BeaconFrame rebroadcast(const MacAddress& mac, const Block16& rpi,
                                const AemMask& aem) {
  return beacon::decode(beacon::encode_gaen(rpi, aem), mac);
}

std::vector<Dossier> reidentify(
    const AttackerDb& db,
    std::span<const crypto::TemporaryExposureKey> published) {
  std::vector<Dossier> out;
  out.reserve(published.size());
  for (const auto& tek : published) {
    Dossier dossier{tek, {}};
    for (const auto& rpi : crypto::regenerate_day(tek)) {
      auto it = db.gaen_index().find(rpi.value);
      if (it == db.gaen_index().end()) continue;
      const double from = crypto::interval_start_seconds(rpi.interval);
      const double to = from + crypto::kIntervalSeconds;
      for (std::size_t idx : it->second) {
        const HarvestRecord& r = db.harvest()[idx];
        if (r.time < from || r.time >= to) continue;
        dossier.sightings.push_back(
            {r.time, r.location, r.rssi, r.mac, rpi.value, r.deputy_id, r.id});
      }
    }
    std::sort(dossier.sightings.begin(), dossier.sightings.end(),
              [](const DossierSighting& a, const DossierSighting& b) {
                return std::tie(a.time, a.record_id) <
                       std::tie(b.time, b.record_id);
              });
    out.push_back(std::move(dossier));
  }
  return out;
}

std::vector<LinkageRow> correlate_mac_rpi(const AttackerDb& db) {
  std::map<std::pair<MacAddress, Block16>, LinkageRow> rows;
  for (const HarvestRecord& r : db.harvest()) {
    const auto* g = std::get_if<beacon::GaenBeacon>(&r.frame.kind);
    if (g == nullptr) continue;
    auto [it, fresh] = rows.try_emplace({r.mac, g->rpi});
    LinkageRow& row = it->second;
    if (fresh) {
      row = {r.mac, g->rpi, r.time, r.time, 0};
    }
    row.first_seen = std::min(row.first_seen, r.time);
    row.last_seen = std::max(row.last_seen, r.time);
    ++row.count;
  }
  std::vector<LinkageRow> out;
  out.reserve(rows.size());
  for (auto& [key, row] : rows) out.push_back(row);
  std::stable_sort(out.begin(), out.end(),
                   [](const LinkageRow& a, const LinkageRow& b) {
                     return std::tie(a.first_seen, a.mac, a.rpi) <
                            std::tie(b.first_seen, b.mac, b.rpi);
                   });
  return out;
}

std::vector<std::string> link_persistent_ids(
    const crypto::TemporaryExposureKey& tek, std::span<const LinkageRow> table,
    std::span<const SideDbEntry> side_db) {
  std::unordered_set<Block16, Block16Hash> rpis;
  for (const auto& rpi : crypto::regenerate_day(tek)) rpis.insert(rpi.value);
  std::set<MacAddress> macs;
  for (const LinkageRow& row : table) {
    if (rpis.contains(row.rpi)) macs.insert(row.mac);
  }
  std::set<std::string> ids;
  for (const SideDbEntry& e : side_db) {
    if (macs.contains(e.mac)) ids.insert(e.persistent_id);
  }
  return {ids.begin(), ids.end()};
}

AttackerServer::AttackerServer(AttackPolicy policy)
    : policy_(std::move(policy)) {
  validate(policy_);
}

void AttackerServer::receive_upload(HarvestRecord record, double sent_at) {
  record.uploaded_at = sent_at + policy_.relay_latency_s;
  inbox_.push_back({record.uploaded_at, seq_++, std::move(record), std::nullopt});
}

void AttackerServer::receive_report(DeputyReport report, double sent_at) {
  inbox_.push_back(
      {sent_at + policy_.relay_latency_s, seq_++, std::nullopt, std::move(report)});
}

void AttackerServer::advance(double t) {
  auto arrived = std::stable_partition(
      inbox_.begin(), inbox_.end(),
      [t](const Pending& p) { return p.arrives_at <= t; });
  std::sort(inbox_.begin(), arrived, [](const Pending& a, const Pending& b) {
    return std::tie(a.arrives_at, a.seq) < std::tie(b.arrives_at, b.seq);
  });
  for (auto it = inbox_.begin(); it != arrived; ++it) {
    if (it->record) db_.upload(std::move(*it->record));
    if (it->report) db_.report(*it->report);
  }
  inbox_.erase(inbox_.begin(), arrived);
}

std::vector<RelayPlanEntry> AttackerServer::plan(double t) const {
  return select_relays(db_, policy_, t);
}

AemMask AttackerServer::emitted_aem(const RelayPlanEntry& entry) const {
  return policy_.tamper_mask ? tamper(entry.aem, *policy_.tamper_mask)
                             : entry.aem;
}

}  // namespace gaen::attack
