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

#include "gaen/device.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace gaen::device {

using crypto::IntervalNumber;
using crypto::kRollingPeriod;

MacAddress random_private_mac(Rng& rng) {
  MacAddress mac;
  for (;;) {
    rng.fill(mac.octets);
    mac.octets[0] &= 0x3f;
    bool all_zero = true;
    bool all_one = mac.octets[0] == 0x3f;
    for (std::size_t i = 1; i < 6; ++i) {
      all_zero = all_zero && mac.octets[i] == 0x00;
      all_one = all_one && mac.octets[i] == 0xff;
    }
    all_zero = all_zero && mac.octets[0] == 0x00;
    if (!all_zero && !all_one) return mac;
  }
}

Device::Device(std::string id, std::uint64_t seed, int tx_power_dbm)
    : id_(std::move(id)),
      rng_(Rng::derive(seed, "device:" + id_)),
      tx_power_dbm_(crypto::Metadata::with_tx_power(tx_power_dbm).tx_power) {}

void Device::advance_to(double t) {
  const IntervalNumber interval = crypto::interval_number(t);
  const IntervalNumber day_start = interval - interval % kRollingPeriod;
  if (!current_tek_ || current_tek_->rolling_start != day_start) {
    current_tek_ = crypto::new_tek(rng_, day_start);
    rpik_ = crypto::derive_rpik(*current_tek_);
    aemk_ = crypto::derive_aemk(*current_tek_);
    tek_history_.push_back(*current_tek_);
    while (tek_history_.size() > kTekRetentionDays) tek_history_.pop_front();
  }
  // The MAC rotates together with the RPI.
  if (mac_history_.empty() || mac_history_.back().interval != interval) {
    MacAddress mac = random_private_mac(rng_);
    while (!mac_history_.empty() && mac == mac_history_.back().mac) {
      mac = random_private_mac(rng_);
    }
    mac_history_.push_back({interval, mac});
  }
}

std::optional<MacAddress> Device::current_mac() const {
  if (mac_history_.empty()) return std::nullopt;
  return mac_history_.back().mac;
}

std::optional<beacon::BeaconFrame> Device::broadcast_current(double t) {
  if (!app_enabled_) return std::nullopt;
  advance_to(t);
  const IntervalNumber interval = crypto::interval_number(t);
  const auto rpi = crypto::generate_rpi(*rpik_, interval);
  const auto aem = crypto::encrypt_aem(
      *aemk_, rpi.value, crypto::Metadata::with_tx_power(tx_power_dbm_));
  const MacAddress mac = mac_history_.back().mac;
  return beacon::decode(beacon::encode_gaen(rpi.value, aem.ciphertext), mac);
}

void Device::on_scan(const radio::Sighting& sighting) {
  sightings_.push_back(sighting);
}

std::vector<crypto::TemporaryExposureKey> Device::diagnose_and_upload(
    server::DiagnosisServer& server, double t) {
  if (!infected_) {
    throw std::logic_error("device '" + id_ + "' is not marked infected");
  }
  std::vector<crypto::TemporaryExposureKey> keys(tek_history_.begin(),
                                                 tek_history_.end());
  server.publish(keys, t);
  return keys;
}

std::vector<ExposureNotification> Device::match_exposures(
    std::span<const crypto::TemporaryExposureKey> published,
    const MatchingParams& params) {
  struct Candidate {
    std::size_t tek_index;
    IntervalNumber interval;
  };
  struct Accumulator {
    crypto::AemKey aemk;
    std::set<double> instants;
    double min_attenuation = std::numeric_limits<double>::infinity();
  };

  std::unordered_map<Block16, Candidate, Block16Hash> lookup;
  std::vector<std::optional<Accumulator>> acc(published.size());
  for (std::size_t k = 0; k < published.size(); ++k) {
    const auto& tek = published[k];
    if (std::find(tek_history_.begin(), tek_history_.end(), tek) !=
        tek_history_.end()) {
      continue;
    }
    for (const auto& rpi : crypto::regenerate_day(tek)) {
      lookup.emplace(rpi.value, Candidate{k, rpi.interval});
    }
  }

  for (const radio::Sighting& s : sightings_) {
    const beacon::BeaconFrame frame = beacon::decode(s.payload.bytes(), s.mac);
    const auto* gaen = std::get_if<beacon::GaenBeacon>(&frame.kind);
    if (gaen == nullptr) continue;
    auto hit = lookup.find(gaen->rpi);
    if (hit == lookup.end()) continue;

    const double valid_from = crypto::interval_start_seconds(hit->second.interval);
    const double valid_to = valid_from + crypto::kIntervalSeconds;
    if (s.time < valid_from - params.tolerance_s ||
        s.time > valid_to + params.tolerance_s) {
      continue;
    }

    auto& slot = acc[hit->second.tek_index];
    if (!slot) {
      slot.emplace();
      slot->aemk = crypto::derive_aemk(published[hit->second.tek_index]);
    }
    const crypto::Metadata meta = crypto::decrypt_aem(
        slot->aemk, gaen->rpi, crypto::AssociatedEncryptedMetadata{gaen->aem});
    const double att = radio::attenuation(meta.tx_power, s.rssi);
    if (att > params.attenuation_threshold_db) continue;
    slot->instants.insert(s.time);
    slot->min_attenuation = std::min(slot->min_attenuation, att);
  }

  std::vector<ExposureNotification> out;
  for (std::size_t k = 0; k < published.size(); ++k) {
    if (!acc[k]) continue;
    const double duration =
        static_cast<double>(acc[k]->instants.size()) * params.sighting_duration_s;
    if (duration >= params.duration_threshold_s) {
      out.push_back({published[k], published[k].day(), duration,
                     acc[k]->min_attenuation});
    }
  }
  notified_ = out;
  return out;
}

}  // namespace gaen::device
