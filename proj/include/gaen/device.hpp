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

#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gaen/beacon_codec.hpp"
#include "gaen/crypto.hpp"
#include "gaen/diagnosis_server.hpp"
#include "gaen/radio_sim.hpp"
#include "gaen/rng.hpp"

namespace gaen::device {

inline constexpr std::size_t kTekRetentionDays = 14;

/// Exposure matching knobs. A sighting is "close" when
/// claimed_tx_power - rssi <= attenuation_threshold_db.
struct MatchingParams {
  /// Accepted distance of a sighting from its RPI's 10-minute validity.
  double tolerance_s = 7200.0;
  double attenuation_threshold_db = 55.0;
  double duration_threshold_s = 900.0;
  /// Exposure time credited per distinct sighting instant (one tick).
  double sighting_duration_s = 1.0;
};

struct ExposureNotification {
  crypto::TemporaryExposureKey matched_tek;
  crypto::IntervalNumber day = 0;
  double cumulative_duration_s = 0.0;
  double min_attenuation_db = 0.0;
};

/// MAC used during one RPI interval; ground truth for linkage checks.
struct MacEpoch {
  crypto::IntervalNumber interval = 0;
  MacAddress mac;
};

/// An honest exposure-notification phone.
class Device {
 public:
  Device(std::string id, std::uint64_t seed, int tx_power_dbm = -8);

  const std::string& id() const { return id_; }
  bool app_enabled() const { return app_enabled_; }
  void set_app_enabled(bool enabled) { app_enabled_ = enabled; }
  int tx_power_dbm() const { return tx_power_dbm_; }

  /// Rolls the TEK at day boundaries and the MAC at interval boundaries.
  /// Called implicitly by broadcast_current().
  void advance_to(double t);

  /// GAEN advertisement for time t, or nullopt while the app is disabled.
  std::optional<beacon::BeaconFrame> broadcast_current(double t);

  /// Stores every sighting; filtering happens in match_exposures().
  void on_scan(const radio::Sighting& sighting);

  void mark_infected() { infected_ = true; }
  bool infected() const { return infected_; }

  /// Publishes the retained TEK history. Throws std::logic_error unless the
  /// device was marked infected.
  std::vector<crypto::TemporaryExposureKey> diagnose_and_upload(
      server::DiagnosisServer& server, double t);

  /// Replaces notified() with the result. The device's own keys are skipped.
  std::vector<ExposureNotification> match_exposures(
      std::span<const crypto::TemporaryExposureKey> published,
      const MatchingParams& params);

  const std::optional<crypto::TemporaryExposureKey>& current_tek() const {
    return current_tek_;
  }
  const std::deque<crypto::TemporaryExposureKey>& tek_history() const {
    return tek_history_;
  }
  const std::vector<radio::Sighting>& sightings() const { return sightings_; }
  const std::vector<ExposureNotification>& notified() const { return notified_; }
  const std::vector<MacEpoch>& mac_history() const { return mac_history_; }
  std::optional<MacAddress> current_mac() const;

 private:
  std::string id_;
  Rng rng_;
  int tx_power_dbm_;
  bool app_enabled_ = true;
  bool infected_ = false;

  std::optional<crypto::TemporaryExposureKey> current_tek_;
  std::optional<crypto::RpiKey> rpik_;
  std::optional<crypto::AemKey> aemk_;
  std::deque<crypto::TemporaryExposureKey> tek_history_;
  std::vector<MacEpoch> mac_history_;

  std::vector<radio::Sighting> sightings_;
  std::vector<ExposureNotification> notified_;
};

/// Fresh non-resolvable private address (two most significant bits 00,
/// neither all-zero nor all-one in the random part).
MacAddress random_private_mac(Rng& rng);

}  // namespace gaen::device
