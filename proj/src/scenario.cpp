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

#include "gaen/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace gaen::scenario {
namespace {

using nlohmann::json;

constexpr double kDefaultStartTime = 1592438400.0;  // 2020-06-18T00:00:00Z
constexpr double kTimeEpsilon = 1e-9;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError("config field '" + path + "': " + what);
}

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) {
    fail(path.empty() ? key : path + "." + key, "missing required field");
  }
  return *it;
}

std::string join(const std::string& path, const char* key) {
  return path.empty() ? key : path + "." + key;
}

double get_number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

double number_or(const json& obj, const char* key, const std::string& path,
                 double fallback) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return fallback;
  return get_number(*it, join(path, key));
}

bool bool_or(const json& obj, const char* key, const std::string& path,
             bool fallback) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return fallback;
  if (!it->is_boolean()) fail(join(path, key), "expected true or false");
  return it->get<bool>();
}

std::string get_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

std::uint64_t get_u64(const json& v, const std::string& path) {
  if (!v.is_number_integer() || (v.is_number_integer() && v.get<std::int64_t>() < 0 &&
                                 !v.is_number_unsigned())) {
    fail(path, "expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::size_t size_or(const json& obj, const char* key, const std::string& path,
                    std::size_t fallback) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return fallback;
  return static_cast<std::size_t>(get_u64(*it, join(path, key)));
}

std::vector<attack::Zone> parse_zones(const json& obj, const char* key,
                                      const std::string& path) {
  std::vector<attack::Zone> zones;
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return zones;
  const std::string zpath = join(path, key);
  if (!it->is_array()) fail(zpath, "expected an array of [x0, y0, x1, y1]");
  for (std::size_t i = 0; i < it->size(); ++i) {
    const json& z = (*it)[i];
    const std::string p = zpath + "[" + std::to_string(i) + "]";
    if (!z.is_array() || z.size() != 4) fail(p, "expected [x0, y0, x1, y1]");
    zones.push_back({get_number(z[0], p), get_number(z[1], p),
                     get_number(z[2], p), get_number(z[3], p)});
    if (zones.back().x1 < zones.back().x0 || zones.back().y1 < zones.back().y0) {
      fail(p, "zone corners are inverted");
    }
  }
  return zones;
}

attack::AttackPolicy parse_attack(const json& a, const std::string& path) {
  if (!a.is_object()) fail(path, "expected an object");
  attack::AttackPolicy p;
  p.harvest_zones = parse_zones(a, "harvest_zones", path);
  p.target_zones = parse_zones(a, "target_zones", path);
  if (auto it = a.find("tamper_mask"); it != a.end() && !it->is_null()) {
    try {
      p.tamper_mask = fixed_from_hex<4>(get_string(*it, join(path, "tamper_mask")));
    } catch (const std::invalid_argument& e) {
      fail(join(path, "tamper_mask"), e.what());
    }
  }
  p.relay_latency_s = number_or(a, "relay_latency", path, p.relay_latency_s);
  p.replay_delay_s = number_or(a, "replay_delay", path, p.replay_delay_s);
  p.replay_duration_s = number_or(a, "replay_duration", path, p.replay_duration_s);
  p.replay_window_s = number_or(a, "replay_window", path, p.replay_window_s);
  p.max_report_age_s = number_or(a, "max_report_age", path, p.max_report_age_s);
  p.collect_all = bool_or(a, "collect_all", path, p.collect_all);
  try {
    attack::validate(p);
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  return p;
}

void parse_nodes(const json& nodes, ScenarioConfig& cfg) {
  if (!nodes.is_array()) fail("nodes", "expected an array");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const json& n = nodes[i];
    const std::string path = "nodes[" + std::to_string(i) + "]";
    const std::string id = get_string(require(n, "id", path), join(path, "id"));
    const std::size_t count = size_or(n, "count", path, 0);
    const double dx = number_or(n, "dx", path, 0.0);
    const double dy = number_or(n, "dy", path, 0.0);

    radio::NodeSpec base;
    base.roles.app = bool_or(n, "app", path, false);
    base.roles.deputy = bool_or(n, "deputy", path, false);
    base.tx_power_dbm = number_or(n, "tx_power", path, base.tx_power_dbm);
    if (base.tx_power_dbm != std::round(base.tx_power_dbm) ||
        base.tx_power_dbm < -127 || base.tx_power_dbm > 127) {
      fail(join(path, "tx_power"), "expected an integer dBm in [-127, 127]");
    }
    const json& traj = require(n, "trajectory", path);
    if (!traj.is_array()) fail(join(path, "trajectory"), "expected an array");
    for (std::size_t w = 0; w < traj.size(); ++w) {
      const std::string wp = join(path, "trajectory") + "[" + std::to_string(w) + "]";
      radio::Waypoint wpt;
      wpt.from = get_number(require(traj[w], "from", wp), join(wp, "from"));
      wpt.to = get_number(require(traj[w], "to", wp), join(wp, "to"));
      wpt.pos.x = get_number(require(traj[w], "x", wp), join(wp, "x"));
      wpt.pos.y = get_number(require(traj[w], "y", wp), join(wp, "y"));
      if (!(wpt.to > wpt.from)) fail(wp, "'to' must be greater than 'from'");
      base.trajectory.push_back(wpt);
    }
    std::optional<double> infected;
    if (auto it = n.find("infected_at"); it != n.end() && !it->is_null()) {
      infected = get_number(*it, join(path, "infected_at"));
    }
    std::optional<std::string> ad_id;
    if (auto it = n.find("advertising_id"); it != n.end() && !it->is_null()) {
      ad_id = get_string(*it, join(path, "advertising_id"));
    }

    const std::size_t replicas = count == 0 ? 1 : count;
    const int width = std::max<int>(2, static_cast<int>(std::to_string(replicas).size()));
    for (std::size_t r = 0; r < replicas; ++r) {
      radio::NodeSpec spec = base;
      std::string suffix;
      if (count > 0) {
        std::string num = std::to_string(r + 1);
        suffix = "-" + std::string(width - num.size(), '0') + num;
      }
      spec.id = id + suffix;
      for (auto& wpt : spec.trajectory) {
        wpt.pos.x += dx * static_cast<double>(r);
        wpt.pos.y += dy * static_cast<double>(r);
      }
      if (infected) cfg.infected_at[spec.id] = *infected;
      if (ad_id) cfg.advertising_id[spec.id] = *ad_id + suffix;
      cfg.world.nodes.push_back(std::move(spec));
    }
  }
}

}  // namespace

ScenarioConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config root must be an object");

  ScenarioConfig cfg;
  cfg.schema_version = static_cast<int>(
      get_u64(require(root, "schema_version", ""), "schema_version"));
  if (cfg.schema_version != kSchemaVersion) {
    fail("schema_version", "unsupported version " +
                               std::to_string(cfg.schema_version) +
                               " (expected " + std::to_string(kSchemaVersion) + ")");
  }
  cfg.name = get_string(require(root, "name", ""), "name");
  cfg.seed = get_u64(require(root, "seed", ""), "seed");
  cfg.world.seed = cfg.seed;
  cfg.world.start_time = number_or(root, "start_time", "", kDefaultStartTime);
  if (cfg.world.start_time < 0) fail("start_time", "must be >= 0");

  const json& world = require(root, "world", "");
  cfg.world.tick = get_number(require(world, "tick", "world"), "world.tick");
  cfg.world.duration =
      get_number(require(world, "duration", "world"), "world.duration");
  cfg.world.radio_range_max =
      number_or(world, "radio_range_max", "world", cfg.world.radio_range_max);
  if (auto it = world.find("path_loss"); it != world.end() && !it->is_null()) {
    cfg.world.path_loss.ref_rssi_at_1m = number_or(
        *it, "ref_rssi_at_1m", "world.path_loss", cfg.world.path_loss.ref_rssi_at_1m);
    cfg.world.path_loss.exponent =
        number_or(*it, "exponent", "world.path_loss", cfg.world.path_loss.exponent);
    cfg.world.path_loss.noise_sigma = number_or(
        *it, "noise_sigma", "world.path_loss", cfg.world.path_loss.noise_sigma);
  }

  if (auto it = root.find("nodes"); it != root.end() && !it->is_null()) {
    parse_nodes(*it, cfg);
  }
  if (auto it = root.find("attack"); it != root.end() && !it->is_null()) {
    cfg.attack = parse_attack(*it, "attack");
  }
  if (auto it = root.find("matching"); it != root.end() && !it->is_null()) {
    cfg.matching.tolerance_s =
        number_or(*it, "tolerance", "matching", cfg.matching.tolerance_s);
    cfg.matching.attenuation_threshold_db = number_or(
        *it, "attenuation_threshold", "matching", cfg.matching.attenuation_threshold_db);
    cfg.matching.duration_threshold_s = number_or(
        *it, "duration_threshold", "matching", cfg.matching.duration_threshold_s);
  }
  cfg.matching.sighting_duration_s = cfg.world.tick;

  if (auto it = root.find("injections"); it != root.end() && !it->is_null()) {
    if (!it->is_array()) fail("injections", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& j = (*it)[i];
      const std::string path = "injections[" + std::to_string(i) + "]";
      Injection inj;
      inj.at = get_number(require(j, "at", path), join(path, "at"));
      inj.receiver = get_string(require(j, "receiver", path), join(path, "receiver"));
      try {
        inj.payload = from_hex(
            get_string(require(j, "payload_hex", path), join(path, "payload_hex")));
        if (inj.payload.size() > beacon::kMaxLegacyPayload) {
          fail(join(path, "payload_hex"), "payload exceeds 31 bytes");
        }
        inj.mac = MacAddress::parse(get_string(require(j, "mac", path), join(path, "mac")));
      } catch (const ConfigError&) {
        throw;
      } catch (const std::invalid_argument& e) {
        fail(path, e.what());
      }
      inj.rssi = get_number(require(j, "rssi", path), join(path, "rssi"));
      cfg.injections.push_back(std::move(inj));
    }
  }

  if (auto it = root.find("coverage"); it != root.end() && !it->is_null()) {
    CoverageSweepConfig c;
    c.grid_steps = size_or(*it, "grid_steps", "coverage", c.grid_steps);
    c.population = size_or(*it, "population", "coverage", c.population);
    c.contacts = size_or(*it, "contacts", "coverage", c.contacts);
    c.one_sided_quality =
        number_or(*it, "one_sided_quality", "coverage", c.one_sided_quality);
    c.seed = it->contains("seed") ? get_u64((*it)["seed"], "coverage.seed") : cfg.seed;
    cfg.coverage = c;
  }
  if (auto it = root.find("visibility"); it != root.end() && !it->is_null()) {
    VisibilitySweepConfig v;
    const json& alphas = require(*it, "alpha_sc", "visibility");
    if (!alphas.is_array() || alphas.empty()) {
      fail("visibility.alpha_sc", "expected a non-empty array");
    }
    for (const json& a : alphas) v.alpha_sc.push_back(get_number(a, "visibility.alpha_sc"));
    v.alpha_cd = number_or(*it, "alpha_cd", "visibility", v.alpha_cd);
    v.infected_fraction =
        number_or(*it, "infected_fraction", "visibility", v.infected_fraction);
    v.population = size_or(*it, "population", "visibility", v.population);
    v.seeds = size_or(*it, "seeds", "visibility", v.seeds);
    v.seed = it->contains("seed") ? get_u64((*it)["seed"], "visibility.seed") : cfg.seed;
    if (auto w = it->find("world"); w != it->end() && !w->is_null()) {
      v.world.area_m = number_or(*w, "area", "visibility.world", v.world.area_m);
      v.world.duration_s = number_or(*w, "duration", "visibility.world", v.world.duration_s);
      v.world.tick_s = number_or(*w, "tick", "visibility.world", v.world.tick_s);
      v.world.move_every_s =
          number_or(*w, "move_every", "visibility.world", v.world.move_every_s);
      v.world.radio_range_m =
          number_or(*w, "radio_range", "visibility.world", v.world.radio_range_m);
    }
    v.world.start_time = cfg.world.start_time;
    cfg.visibility = v;
  }

  if (auto it = root.find("outputs"); it != root.end() && !it->is_null()) {
    if (auto d = it->find("dir"); d != it->end() && !d->is_null()) {
      cfg.output_dir = get_string(*d, "outputs.dir");
    }
  }

  validate(cfg);
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void validate(const ScenarioConfig& cfg) {
  try {
    radio::validate(cfg.world);
  } catch (const radio::DomainError& e) {
    throw ConfigError(std::string("config field 'world': ") + e.what());
  }
  std::set<std::string> ids;
  for (const auto& n : cfg.world.nodes) ids.insert(n.id);
  auto app_user = [&](const std::string& id) {
    for (const auto& n : cfg.world.nodes) {
      if (n.id == id) return n.roles.app;
    }
    return false;
  };
  for (const auto& [id, at] : cfg.infected_at) {
    if (!ids.contains(id)) fail("nodes", "unknown node '" + id + "'");
    if (!app_user(id)) {
      fail("nodes", "node '" + id + "' has infected_at but does not run the app");
    }
    if (at < 0 || at > cfg.world.duration) {
      fail("nodes", "infected_at of '" + id + "' lies outside the run");
    }
  }
  for (const Injection& inj : cfg.injections) {
    if (!ids.contains(inj.receiver)) {
      fail("injections", "unknown receiver '" + inj.receiver + "'");
    }
    if (inj.at < 0 || inj.at >= cfg.world.duration) {
      fail("injections", "injection time lies outside the run");
    }
  }
  if (cfg.coverage) {
    if (cfg.coverage->grid_steps == 0) fail("coverage.grid_steps", "must be > 0");
    if (cfg.coverage->population < 2) fail("coverage.population", "must be >= 2");
    if (cfg.coverage->one_sided_quality < 0 || cfg.coverage->one_sided_quality > 1) {
      fail("coverage.one_sided_quality", "must lie in [0, 1]");
    }
  }
  if (cfg.visibility) {
    for (double a : cfg.visibility->alpha_sc) {
      if (a < 0 || a > 1) fail("visibility.alpha_sc", "values must lie in [0, 1]");
    }
    if (cfg.visibility->alpha_cd < 0 || cfg.visibility->alpha_cd > 1) {
      fail("visibility.alpha_cd", "must lie in [0, 1]");
    }
    if (cfg.visibility->population < 2) fail("visibility.population", "must be >= 2");
  }
}

namespace {

void run_world(const ScenarioConfig& cfg, ScenarioResult& out) {
  radio::World world(cfg.world);
  const std::size_t n = world.node_count();
  for (std::size_t i = 0; i < n; ++i) out.node_ids.push_back(world.node(i).id);

  std::vector<std::optional<device::Device>> devices(n);
  std::vector<std::optional<attack::Deputy>> deputies(n);
  const attack::AttackPolicy policy = cfg.attack.value_or(attack::AttackPolicy{});
  for (std::size_t i = 0; i < n; ++i) {
    const auto& spec = world.node(i);
    if (spec.roles.app) {
      devices[i].emplace(spec.id, cfg.seed, static_cast<int>(spec.tx_power_dbm));
    }
    if (spec.roles.deputy) {
      deputies[i] = attack::Deputy{spec.id, policy.collect_all};
      out.deputy_ids.push_back(spec.id);
    }
  }
  attack::AttackerServer attacker(policy);
  server::DiagnosisServer diagnosis;

  std::vector<std::pair<std::size_t, double>> pending_diagnoses;
  for (const auto& [id, at] : cfg.infected_at) {
    pending_diagnoses.emplace_back(world.node_index(id), at);
  }
  std::sort(pending_diagnoses.begin(), pending_diagnoses.end());
  auto diagnose_due = [&](double rel, double t) {
    for (auto& [idx, at] : pending_diagnoses) {
      if (at < 0 || at > rel + kTimeEpsilon) continue;
      devices[idx]->mark_infected();
      out.published_by[world.node(idx).id] =
          devices[idx]->diagnose_and_upload(diagnosis, t);
      at = -1.0;
    }
  };

  std::vector<Injection> injections = cfg.injections;
  std::stable_sort(injections.begin(), injections.end(),
                   [](const Injection& a, const Injection& b) { return a.at < b.at; });
  std::size_t next_injection = 0;

  struct Scheduled {
    std::size_t deputy;
    Block16 rpi;
    attack::AemMask aem;
    MacAddress mac;
  };
  std::multimap<double, Scheduled> schedule;

  // (receiver, emitter, day) of frames an app user really heard from another
  // app user's own broadcast.
  std::set<std::tuple<std::size_t, std::size_t, crypto::IntervalNumber>> contacts;

  std::vector<radio::Emission> emissions;
  std::vector<bool> honest;
  for (std::size_t k = 0; k < world.tick_count(); ++k) {
    const double t = world.time_at(k);
    const double rel = t - cfg.world.start_time;
    diagnose_due(rel, t);
    attacker.advance(t);

    while (next_injection < injections.size() &&
           injections[next_injection].at <= rel + kTimeEpsilon) {
      const Injection& inj = injections[next_injection++];
      const std::size_t rx = world.node_index(inj.receiver);
      radio::Sighting s{beacon::AdvPayload::from(inj.payload), inj.mac, inj.rssi, t,
                        world.position(rx, t).value_or(radio::Vec2{})};
      world.inject(inj.receiver, s);
    }

    emissions.clear();
    honest.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (!devices[i] || !world.position(i, t)) continue;
      if (auto frame = devices[i]->broadcast_current(t)) {
        emissions.push_back({i, frame->mac, beacon::AdvPayload::from(frame->payload)});
        honest.push_back(true);
      }
    }
    for (auto it = schedule.begin();
         it != schedule.end() && it->first <= t + kTimeEpsilon;) {
      const Scheduled& s = it->second;
      if (world.position(s.deputy, t)) {
        const beacon::BeaconFrame frame = attack::rebroadcast(s.mac, s.rpi, s.aem);
        emissions.push_back({s.deputy, frame.mac, beacon::AdvPayload::from(frame.payload)});
        honest.push_back(false);
        out.relay_emissions.push_back({t, world.node(s.deputy).id, s.rpi, s.aem, s.mac});
      }
      it = schedule.erase(it);
    }

    for (const radio::ScanEvent& ev : world.step(t, emissions)) {
      const std::size_t rx = ev.receiver;
      if (devices[rx]) {
        devices[rx]->on_scan(ev.sighting);
        if (ev.emission != radio::kInjected && honest[ev.emission]) {
          contacts.emplace(rx, ev.emitter,
                           crypto::interval_number(t) / crypto::kRollingPeriod);
        }
      }
      if (deputies[rx]) {
        if (auto rec = deputies[rx]->on_scan(ev.sighting)) {
          attacker.receive_upload(std::move(*rec), t);
        }
      }
    }

    for (std::size_t i = 0; i < n; ++i) {
      if (!deputies[i]) continue;
      if (auto pos = world.position(i, t)) {
        attacker.receive_report({world.node(i).id, *pos, t}, t);
      }
    }

    for (attack::RelayPlanEntry& entry : attacker.plan(t)) {
      const attack::AemMask aem = attacker.emitted_aem(entry);
      for (const std::string& target : entry.deputy_targets) {
        schedule.emplace(entry.emit_time,
                         Scheduled{world.node_index(target), entry.rpi, aem, entry.mac});
      }
      out.decisions.push_back({t, std::move(entry), aem});
    }
  }

  const double t_end = cfg.world.start_time + cfg.world.duration;
  diagnose_due(cfg.world.duration, t_end);
  attacker.advance(std::numeric_limits<double>::infinity());

  out.published = diagnosis.snapshot(t_end);
  const auto keys = out.published.keys();
  std::map<crypto::TemporaryExposureKey, std::size_t> owner;
  for (const auto& [id, teks] : out.published_by) {
    for (const auto& tek : teks) owner.emplace(tek, world.node_index(id));
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!devices[i]) continue;
    for (const auto& note : devices[i]->match_exposures(keys, cfg.matching)) {
      NotificationRow row;
      row.device_id = world.node(i).id;
      row.tek = note.matched_tek;
      row.day = note.day;
      row.duration_s = note.cumulative_duration_s;
      row.min_attenuation_db = note.min_attenuation_db;
      auto o = owner.find(note.matched_tek);
      if (o != owner.end()) {
        row.tek_owner = world.node(o->second).id;
        row.ground_truth_contact = contacts.contains({i, o->second, note.day});
      }
      out.notifications.push_back(std::move(row));
    }
    out.mac_ground_truth[world.node(i).id] = devices[i]->mac_history();
  }

  attacker.db().set_published(out.published);
  out.harvest = attacker.db().harvest_snapshot();
  out.dossiers = attack::reidentify(attacker.db(), keys);
  out.linkage = attack::correlate_mac_rpi(attacker.db());
  for (const auto& [id, ad] : cfg.advertising_id) {
    const auto& hist = out.mac_ground_truth[id];
    if (!hist.empty()) out.side_db.push_back({hist.front().mac, ad});
  }
  for (const auto& tek : keys) {
    IdentityLink link;
    link.tek = tek;
    if (auto o = owner.find(tek); o != owner.end()) link.owner = world.node(o->second).id;
    link.persistent_ids = attack::link_persistent_ids(tek, out.linkage, out.side_db);
    out.identity_links.push_back(std::move(link));
  }
  out.events = world.log();
}

void run_sweeps(const ScenarioConfig& cfg, ScenarioResult& out) {
  if (cfg.coverage) {
    utility::PopulationModel base;
    base.n = cfg.coverage->population;
    base.contacts = cfg.coverage->contacts;
    base.one_sided_quality = cfg.coverage->one_sided_quality;
    base.seed = cfg.coverage->seed;
    const auto grid = utility::make_grid(cfg.coverage->grid_steps);
    out.coverage = utility::sweep(base, grid);
  }
  if (cfg.visibility) {
    const auto& v = *cfg.visibility;
    for (std::size_t s = 0; s < v.seeds; ++s) {
      for (double a : v.alpha_sc) {
        utility::PopulationModel m;
        m.n = v.population;
        m.alpha_sc = a;
        m.alpha_cd = v.alpha_cd;
        m.infected_fraction = v.infected_fraction;
        m.seed = v.seed + s;
        const auto e2e = utility::simulate_population(m, v.world);
        out.visibility.push_back({a, v.alpha_cd, m.seed,
                                  utility::infected_visibility(m, e2e)});
      }
    }
  }
}

}  // namespace

ScenarioResult run(const ScenarioConfig& config) {
  validate(config);
  ScenarioResult out;
  out.config = config;
  if (!config.world.nodes.empty()) run_world(config, out);
  run_sweeps(config, out);
  return out;
}

ScenarioResult run_sweep(const ScenarioConfig& config) {
  validate(config);
  ScenarioResult out;
  out.config = config;
  run_sweeps(config, out);
  return out;
}

}  // namespace gaen::scenario
