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

#include "gaen/radio_sim.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace gaen::radio {

double distance(const Vec2& a, const Vec2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

void validate(const WorldConfig& config) {
  if (!(config.tick > 0.0)) throw DomainError("tick must be > 0");
  if (!(config.duration >= 0.0)) throw DomainError("duration must be >= 0");
  const double ticks = config.duration / config.tick;
  if (std::abs(ticks - std::round(ticks)) > 1e-9) {
    throw DomainError("duration must be a multiple of tick");
  }
  if (!(config.path_loss.exponent > 0.0)) {
    throw DomainError("path-loss exponent must be > 0");
  }
  if (config.path_loss.ref_rssi_at_1m > 0.0) {
    throw DomainError("ref_rssi_at_1m must be <= 0 dBm");
  }
  if (config.path_loss.noise_sigma < 0.0) {
    throw DomainError("noise_sigma must be >= 0");
  }
  if (!(config.radio_range_max > 0.0)) {
    throw DomainError("radio_range_max must be > 0");
  }
  std::set<std::string> seen;
  for (const NodeSpec& n : config.nodes) {
    if (n.id.empty()) throw DomainError("node id must not be empty");
    if (!seen.insert(n.id).second) {
      throw DomainError("duplicate node id '" + n.id + "'");
    }
    for (const Waypoint& w : n.trajectory) {
      if (!(w.to > w.from)) {
        throw DomainError("node '" + n.id + "' has an empty waypoint span");
      }
    }
  }
}

std::optional<double> propagate(double tx_power_dbm, double distance_m,
                                double noise_draw_db, const PathLoss& model,
                                double radio_range_max) {
  if (!(distance_m > 0.0)) {
    throw DomainError("propagate: distance must be > 0");
  }
  if (distance_m > radio_range_max) return std::nullopt;
  return tx_power_dbm + model.ref_rssi_at_1m -
         10.0 * model.exponent * std::log10(distance_m) + noise_draw_db;
}

World::World(WorldConfig config)
    : config_(std::move(config)), noise_rng_(Rng::derive(config_.seed, "radio-noise")) {
  validate(config_);
  tick_count_ =
      static_cast<std::size_t>(std::llround(config_.duration / config_.tick));
  for (std::size_t i = 0; i < config_.nodes.size(); ++i) {
    index_.emplace(config_.nodes[i].id, i);
  }
}

std::size_t World::node_index(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) {
    throw UnknownNodeError("unknown node '" + std::string(id) + "'");
  }
  return it->second;
}

std::optional<Vec2> World::position(std::size_t node, double t) const {
  const double rel = t - config_.start_time;
  for (const Waypoint& w : config_.nodes.at(node).trajectory) {
    if (rel >= w.from && rel < w.to) return w.pos;
  }
  return std::nullopt;
}

std::vector<ScanEvent> World::step(double t,
                                   std::span<const Emission> emissions) {
  std::vector<std::optional<Vec2>> where(config_.nodes.size());
  for (std::size_t i = 0; i < config_.nodes.size(); ++i) {
    where[i] = position(i, t);
  }

  std::vector<ScanEvent> events;
  for (std::size_t ei = 0; ei < emissions.size(); ++ei) {
    const Emission& e = emissions[ei];
    const auto& from = where.at(e.emitter);
    if (!from) continue;
    const double tx = config_.nodes[e.emitter].tx_power_dbm;
    for (std::size_t rx = 0; rx < config_.nodes.size(); ++rx) {
      if (rx == e.emitter || !where[rx] || !config_.nodes[rx].roles.scans()) {
        continue;
      }
      const double d = std::max(distance(*from, *where[rx]), kMinSeparation);
      if (d > config_.radio_range_max) continue;
      const double noise = config_.path_loss.noise_sigma > 0.0
                               ? config_.path_loss.noise_sigma * noise_rng_.normal()
                               : 0.0;
      const auto rssi =
          propagate(tx, d, noise, config_.path_loss, config_.radio_range_max);
      events.push_back(
          ScanEvent{rx, e.emitter, ei, Sighting{e.payload, e.mac, *rssi, t, *where[rx]}});
    }
  }
  log_.insert(log_.end(), events.begin(), events.end());

  // Injected sightings are already in the log; hand over the ones now due.
  auto due = std::stable_partition(
      undelivered_.begin(), undelivered_.end(),
      [t](const ScanEvent& ev) { return ev.sighting.time <= t; });
  events.insert(events.end(), undelivered_.begin(), due);
  undelivered_.erase(undelivered_.begin(), due);
  return events;
}

void World::inject(std::string_view receiver_id, const Sighting& spurious) {
  const std::size_t rx = node_index(receiver_id);
  ScanEvent ev{rx, kInjected, kInjected, spurious};
  log_.push_back(ev);
  undelivered_.push_back(std::move(ev));
}

}  // namespace gaen::radio
