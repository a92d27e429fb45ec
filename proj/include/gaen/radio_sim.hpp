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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gaen/beacon_codec.hpp"
#include "gaen/bytes.hpp"
#include "gaen/rng.hpp"

namespace gaen::radio {

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownNodeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Vec2&) const = default;
};

double distance(const Vec2& a, const Vec2& b);

/// Log-distance path loss:
///   rssi = tx_power + ref_rssi_at_1m - 10 * exponent * log10(d) + noise
struct PathLoss {
  double ref_rssi_at_1m = -41.0;
  double exponent = 2.0;
  double noise_sigma = 0.0;
};

/// The node sits at `pos` for relative times in [from, to). Outside every
/// waypoint the node is absent from the world.
struct Waypoint {
  double from = 0.0;
  double to = 0.0;
  Vec2 pos;
};

struct NodeRoles {
  bool app = false;     // runs the exposure-notification app
  bool deputy = false;  // carries the attacker's SDK
  bool scans() const { return app || deputy; }
};

struct NodeSpec {
  std::string id;
  std::vector<Waypoint> trajectory;
  NodeRoles roles;
  double tx_power_dbm = -8.0;  // physical transmit power
};

struct WorldConfig {
  std::vector<NodeSpec> nodes;
  PathLoss path_loss;
  double radio_range_max = 30.0;
  double tick = 1.0;
  double duration = 0.0;
  double start_time = 0.0;  // absolute Unix seconds of relative time 0
  std::uint64_t seed = 0;
};

/// Throws DomainError describing the first violated constraint.
void validate(const WorldConfig& config);

struct Sighting {
  beacon::AdvPayload payload;
  MacAddress mac;
  double rssi = 0.0;  // dBm
  double time = 0.0;  // absolute Unix seconds
  Vec2 rx_location;
};

inline constexpr std::size_t kInjected = static_cast<std::size_t>(-1);

struct ScanEvent {
  std::size_t receiver = 0;
  /// Ground truth, invisible to devices: node index of the physical emitter,
  /// or kInjected for sightings inserted with World::inject().
  std::size_t emitter = kInjected;
  /// Index into the emissions passed to step(), or kInjected.
  std::size_t emission = kInjected;
  Sighting sighting;
};

/// One advertisement put on air during a tick.
struct Emission {
  std::size_t emitter = 0;
  MacAddress mac;
  beacon::AdvPayload payload;
};

/// Received power, or nullopt when distance exceeds radio_range_max.
/// Throws DomainError for distance <= 0.
std::optional<double> propagate(double tx_power_dbm, double distance_m,
                                double noise_draw_db, const PathLoss& model,
                                double radio_range_max);

/// claimed_tx_power - rssi. Uses the power the beacon *claims*, which is the
/// value an AEM tamper changes.
inline double attenuation(double claimed_tx_power_dbm, double rssi_dbm) {
  return claimed_tx_power_dbm - rssi_dbm;
}

/// Distances below this are treated as this when co-located nodes exchange
/// frames, so rssi never exceeds tx_power.
inline constexpr double kMinSeparation = 0.1;

class World {
 public:
  explicit World(WorldConfig config);

  const WorldConfig& config() const { return config_; }
  std::size_t node_count() const { return config_.nodes.size(); }
  const NodeSpec& node(std::size_t index) const { return config_.nodes.at(index); }
  std::size_t node_index(std::string_view id) const;

  std::size_t tick_count() const { return tick_count_; }
  /// Absolute time of tick k.
  double time_at(std::size_t k) const {
    return config_.start_time + static_cast<double>(k) * config_.tick;
  }

  /// Position at absolute time t, or nullopt if absent.
  std::optional<Vec2> position(std::size_t node, double t) const;

  /// Delivers each emission once to every present scanning node in range
  /// (other than its emitter), then any injected sightings due by t.
  /// Every returned event is also appended to the world log.
  std::vector<ScanEvent> step(double t, std::span<const Emission> emissions);

  /// Appends the spurious sighting to the receiver's stream at once; it is
  /// handed to the receiver by the next step(). Throws UnknownNodeError.
  void inject(std::string_view receiver_id, const Sighting& spurious);

  const std::vector<ScanEvent>& log() const { return log_; }

 private:
  WorldConfig config_;
  std::size_t tick_count_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
  Rng noise_rng_;
  std::vector<ScanEvent> log_;
  std::vector<ScanEvent> undelivered_;
};

}  // namespace gaen::radio
