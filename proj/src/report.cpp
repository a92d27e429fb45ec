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

#include "gaen/report.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace gaen::report {
namespace {

using ojson = nlohmann::ordered_json;

std::string fmt(double v, int decimals = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string hex(std::span<const std::uint8_t> b) { return to_hex(b); }

ojson tek_json(const crypto::TemporaryExposureKey& tek) {
  ojson j;
  j["tek_hex"] = hex(tek.key);
  j["rolling_start"] = tek.rolling_start;
  return j;
}

ojson vec_json(const radio::Vec2& v) { return ojson::array({v.x, v.y}); }

std::ofstream open(const std::filesystem::path& p) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + p.string() + "'");
  return out;
}

std::string node_name(const scenario::ScenarioResult& r, std::size_t idx) {
  if (idx == radio::kInjected) return "injected";
  return r.node_ids.at(idx);
}

void write_events(const scenario::ScenarioResult& r, std::ostream& out) {
  for (const radio::ScanEvent& ev : r.events) {
    const auto frame = beacon::decode(ev.sighting.payload.bytes(), ev.sighting.mac);
    ojson j;
    j["t"] = ev.sighting.time;
    j["receiver"] = node_name(r, ev.receiver);
    j["emitter"] = node_name(r, ev.emitter);
    j["mac"] = ev.sighting.mac.to_string();
    j["rssi"] = ev.sighting.rssi;
    j["kind"] = std::string(beacon::kind_name(frame.kind));
    j["payload_hex"] = hex(ev.sighting.payload.bytes());
    j["rx_location"] = vec_json(ev.sighting.rx_location);
    out << j.dump() << '\n';
  }
}

void write_notifications(const scenario::ScenarioResult& r, std::ostream& out) {
  out << "device_id,tek_hex,rolling_start,tek_owner,day,duration_s,"
         "min_attenuation_db,ground_truth_contact\n";
  for (const auto& n : r.notifications) {
    out << n.device_id << ',' << hex(n.tek.key) << ',' << n.tek.rolling_start
        << ',' << n.tek_owner << ',' << n.day << ',' << fmt(n.duration_s) << ','
        << fmt(n.min_attenuation_db) << ',' << (n.ground_truth_contact ? 1 : 0)
        << '\n';
  }
}

void write_published(const scenario::ScenarioResult& r, std::ostream& out) {
  for (const auto& e : r.published.entries) {
    ojson j = tek_json(e.tek);
    j["published_at"] = e.publication_time;
    out << j.dump() << '\n';
  }
}

void write_harvest(const scenario::ScenarioResult& r, std::ostream& out) {
  for (const auto& h : r.harvest) {
    ojson j;
    j["id"] = h.id;
    j["deputy"] = h.deputy_id;
    j["t"] = h.time;
    j["uploaded_at"] = h.uploaded_at;
    j["mac"] = h.mac.to_string();
    j["rssi"] = h.rssi;
    j["location"] = vec_json(h.location);
    j["kind"] = std::string(beacon::kind_name(h.frame.kind));
    j["payload_hex"] = hex(h.frame.payload);
    out << j.dump() << '\n';
  }
}

void write_plan(const scenario::ScenarioResult& r, std::ostream& out) {
  for (const auto& d : r.decisions) {
    ojson j;
    j["type"] = "decision";
    j["t"] = d.t;
    j["rpi_hex"] = hex(d.entry.rpi);
    j["aem_harvested_hex"] = hex(d.entry.aem);
    j["aem_emitted_hex"] = hex(d.emitted_aem);
    j["mac"] = d.entry.mac.to_string();
    j["harvested_at"] = d.entry.harvested_at;
    j["emit_time"] = d.entry.emit_time;
    j["source_records"] = d.entry.source_records;
    j["source_deputies"] = d.entry.source_deputies;
    j["targets"] = d.entry.deputy_targets;
    out << j.dump() << '\n';
  }
  for (const auto& e : r.relay_emissions) {
    ojson j;
    j["type"] = "emission";
    j["t"] = e.t;
    j["deputy"] = e.deputy_id;
    j["rpi_hex"] = hex(e.rpi);
    j["aem_hex"] = hex(e.aem);
    j["mac"] = e.mac.to_string();
    out << j.dump() << '\n';
  }
}

void write_dossiers(const scenario::ScenarioResult& r, std::ostream& out) {
  ojson arr = ojson::array();
  for (const auto& d : r.dossiers) {
    ojson j = tek_json(d.tek);
    ojson s = ojson::array();
    for (const auto& x : d.sightings) {
      ojson e;
      e["t"] = x.time;
      e["location"] = vec_json(x.location);
      e["rssi"] = x.rssi;
      e["mac"] = x.mac.to_string();
      e["rpi_hex"] = hex(x.rpi);
      e["deputy"] = x.deputy_id;
      e["record_id"] = x.record_id;
      s.push_back(std::move(e));
    }
    j["sightings"] = std::move(s);
    arr.push_back(std::move(j));
  }
  out << arr.dump(2) << '\n';
}

void write_linkage(const scenario::ScenarioResult& r, std::ostream& out) {
  out << "mac,rpi_hex,first_seen,last_seen,count\n";
  for (const auto& l : r.linkage) {
    out << l.mac.to_string() << ',' << hex(l.rpi) << ',' << fmt(l.first_seen)
        << ',' << fmt(l.last_seen) << ',' << l.count << '\n';
  }
}

void write_side_db(const scenario::ScenarioResult& r, std::ostream& out) {
  out << "mac,persistent_id\n";
  for (const auto& e : r.side_db) {
    out << e.mac.to_string() << ',' << e.persistent_id << '\n';
  }
}

void write_identity_links(const scenario::ScenarioResult& r, std::ostream& out) {
  ojson arr = ojson::array();
  for (const auto& l : r.identity_links) {
    ojson j = tek_json(l.tek);
    j["owner"] = l.owner;
    j["persistent_ids"] = l.persistent_ids;
    arr.push_back(std::move(j));
  }
  out << arr.dump(2) << '\n';
}

void write_mac_truth(const scenario::ScenarioResult& r, std::ostream& out) {
  out << "device_id,interval,mac\n";
  for (const auto& [id, hist] : r.mac_ground_truth) {
    for (const auto& e : hist) {
      out << id << ',' << e.interval << ',' << e.mac.to_string() << '\n';
    }
  }
}

void write_coverage(const scenario::ScenarioResult& r, std::ostream& out) {
  out << "alpha_sc,alpha_cd,seed,n_contacts,sc_detected,attacker_two_sided,"
         "attacker_one_sided,sc_coverage,attacker_coverage,"
         "expected_sc_coverage,expected_attacker_coverage,"
         "attacker_individual_coverage\n";
  const double q = r.config.coverage ? r.config.coverage->one_sided_quality : 1.0;
  for (const auto& c : r.coverage) {
    out << fmt(c.alpha_sc, 4) << ',' << fmt(c.alpha_cd, 4) << ',' << c.seed << ','
        << c.n_contacts << ',' << c.sc_detected << ',' << c.attacker_two_sided
        << ',' << c.attacker_one_sided << ',' << fmt(c.sc_coverage, 6) << ','
        << fmt(c.attacker_coverage, 6) << ','
        << fmt(utility::expected_sc_coverage(c.alpha_sc), 6) << ','
        << fmt(utility::expected_attacker_coverage(c.alpha_cd, q), 6) << ','
        << fmt(c.attacker_individual_coverage, 6) << '\n';
  }
}

void write_visibility(const scenario::ScenarioResult& r, std::ostream& out) {
  out << "alpha_sc,alpha_cd,seed,infected,authority_known,attacker_known,"
         "authority_fraction,attacker_fraction\n";
  for (const auto& v : r.visibility) {
    out << fmt(v.alpha_sc, 4) << ',' << fmt(v.alpha_cd, 4) << ',' << v.seed << ','
        << v.report.infected << ',' << v.report.authority_known << ','
        << v.report.attacker_known << ',' << fmt(v.report.authority_fraction, 6)
        << ',' << fmt(v.report.attacker_fraction, 6) << '\n';
  }
}

}  // namespace

std::vector<TestVector> make_test_vectors(std::size_t count, std::uint64_t seed) {
  Rng rng = Rng::derive(seed, "test-vectors");
  std::vector<TestVector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    TestVector v;
    // Days between 2020 and roughly 2030.
    const auto day = static_cast<crypto::IntervalNumber>(18262 + rng.uniform_below(3650));
    v.tek = crypto::new_tek(rng, day * crypto::kRollingPeriod);
    v.interval = v.tek.rolling_start +
                 static_cast<crypto::IntervalNumber>(rng.uniform_below(crypto::kRollingPeriod));
    v.rpik = crypto::derive_rpik(v.tek);
    v.aemk = crypto::derive_aemk(v.tek);
    v.rpi = crypto::generate_rpi(v.rpik, v.interval).value;
    const int tx = static_cast<int>(rng.uniform_below(255)) - 127;
    const auto meta = crypto::Metadata::with_tx_power(tx);
    v.metadata = meta.to_bytes();
    v.aem = crypto::encrypt_aem(v.aemk, v.rpi, meta).ciphertext;
    out.push_back(v);
  }
  return out;
}

void write_test_vectors(std::ostream& out, std::span<const TestVector> vectors) {
  for (const TestVector& v : vectors) {
    ojson j;
    j["tek_hex"] = hex(v.tek.key);
    j["rolling_start"] = v.tek.rolling_start;
    j["interval"] = v.interval;
    j["rpik_hex"] = hex(v.rpik.bytes);
    j["rpi_hex"] = hex(v.rpi);
    j["aemk_hex"] = hex(v.aemk.bytes);
    j["meta_hex"] = hex(v.metadata);
    j["aem_hex"] = hex(v.aem);
    out << j.dump() << '\n';
  }
}

std::vector<TestVector> read_test_vectors(std::istream& in) {
  std::vector<TestVector> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      TestVector v;
      v.tek.key = fixed_from_hex<16>(j.at("tek_hex").get<std::string>());
      v.tek.rolling_start = j.at("rolling_start").get<crypto::IntervalNumber>();
      v.interval = j.at("interval").get<crypto::IntervalNumber>();
      v.rpik.bytes = fixed_from_hex<16>(j.at("rpik_hex").get<std::string>());
      v.rpi = fixed_from_hex<16>(j.at("rpi_hex").get<std::string>());
      v.aemk.bytes = fixed_from_hex<16>(j.at("aemk_hex").get<std::string>());
      v.metadata = fixed_from_hex<4>(j.at("meta_hex").get<std::string>());
      v.aem = fixed_from_hex<4>(j.at("aem_hex").get<std::string>());
      out.push_back(v);
    } catch (const std::exception& e) {
      throw std::runtime_error("test vector line " + std::to_string(lineno) +
                               ": " + e.what());
    }
  }
  return out;
}

std::string summary_json(const scenario::ScenarioResult& r) {
  ojson j;
  j["name"] = r.config.name;
  j["seed"] = r.config.seed;
  j["nodes"] = r.node_ids.size();
  j["deputies"] = r.deputy_ids;
  j["scan_events"] = r.events.size();
  j["published_teks"] = r.published.entries.size();
  std::size_t false_positives = 0;
  ojson notified = ojson::array();
  for (const auto& n : r.notifications) {
    if (!n.ground_truth_contact) ++false_positives;
    notified.push_back(n.device_id);
  }
  j["notifications"] = r.notifications.size();
  j["notified_devices"] = std::move(notified);
  j["notifications_without_contact"] = false_positives;
  j["harvest_records"] = r.harvest.size();
  j["relay_decisions"] = r.decisions.size();
  j["relay_emissions"] = r.relay_emissions.size();
  std::size_t dossier_sightings = 0;
  for (const auto& d : r.dossiers) dossier_sightings += d.sightings.size();
  j["dossier_sightings"] = dossier_sightings;
  std::size_t linked = 0;
  for (const auto& l : r.identity_links) linked += l.persistent_ids.empty() ? 0 : 1;
  j["teks_linked_to_identity"] = linked;
  j["coverage_points"] = r.coverage.size();
  j["visibility_points"] = r.visibility.size();
  return j.dump(2);
}

std::vector<std::string> write_artifacts(const scenario::ScenarioResult& r,
                                         const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> written;
  auto emit = [&](const char* name, auto&& writer) {
    auto out = open(dir / name);
    writer(r, out);
    written.emplace_back(name);
  };
  if (!r.node_ids.empty()) {
    emit("events.jsonl", write_events);
    emit("notifications.csv", write_notifications);
    emit("published_teks.jsonl", write_published);
    emit("harvest.jsonl", write_harvest);
    emit("attack_plan.jsonl", write_plan);
    emit("dossiers.json", write_dossiers);
    emit("mac_linkage.csv", write_linkage);
    emit("side_database.csv", write_side_db);
    emit("identity_links.json", write_identity_links);
    emit("ground_truth_macs.csv", write_mac_truth);
  }
  if (r.config.coverage) emit("coverage.csv", write_coverage);
  if (r.config.visibility) emit("visibility.csv", write_visibility);
  {
    auto out = open(dir / "summary.json");
    out << summary_json(r) << '\n';
    written.emplace_back("summary.json");
  }
  return written;
}

}  // namespace gaen::report
