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

#include "gaen/utility_model.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

#include "gaen/attacker.hpp"
#include "gaen/device.hpp"
#include "gaen/diagnosis_server.hpp"
#include "gaen/radio_sim.hpp"
#include "gaen/rng.hpp"

namespace gaen::utility {
namespace {

bool is_fraction(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace

void validate(const PopulationModel& model) {
  if (model.n < 2) throw std::invalid_argument("population needs n >= 2");
  if (!is_fraction(model.alpha_sc) || !is_fraction(model.alpha_cd) ||
      !is_fraction(model.infected_fraction) ||
      !is_fraction(model.one_sided_quality)) {
    throw std::invalid_argument(
        "alpha_sc, alpha_cd, infected_fraction and one_sided_quality must lie "
        "in [0, 1]");
  }
}

CoverageReport simulate_coverage(const PopulationModel& model) {
  validate(model);
  Rng rng(model.seed);
  // Group memberships are drawn independently; the groups may intersect.
  std::vector<std::uint8_t> sc(model.n), cd(model.n);
  std::size_t cd_members = 0;
  for (std::size_t i = 0; i < model.n; ++i) {
    sc[i] = rng.uniform01() < model.alpha_sc;
    cd[i] = rng.uniform01() < model.alpha_cd;
    cd_members += cd[i];
  }

  CoverageReport r;
  r.alpha_sc = model.alpha_sc;
  r.alpha_cd = model.alpha_cd;
  r.seed = model.seed;
  r.n_contacts = model.contacts;
  for (std::size_t c = 0; c < model.contacts; ++c) {
    const std::size_t a = rng.uniform_below(model.n);
    std::size_t b = rng.uniform_below(model.n - 1);
    if (b >= a) ++b;
    if (sc[a] && sc[b]) ++r.sc_detected;
    const int deputies = cd[a] + cd[b];
    if (deputies == 2) {
      ++r.attacker_two_sided;
    } else if (deputies == 1) {
      ++r.attacker_one_sided;
    }
  }
  if (model.contacts > 0) {
    const double total = static_cast<double>(model.contacts);
    r.sc_coverage = static_cast<double>(r.sc_detected) / total;
    r.attacker_coverage =
        (static_cast<double>(r.attacker_two_sided) +
         model.one_sided_quality * static_cast<double>(r.attacker_one_sided)) /
        total;
  }
  r.attacker_individual_coverage =
      static_cast<double>(cd_members) / static_cast<double>(model.n);
  return r;
}

std::vector<GridPoint> make_grid(std::size_t steps) {
  std::vector<GridPoint> grid;
  if (steps == 0) return grid;
  const double denom = steps > 1 ? static_cast<double>(steps - 1) : 1.0;
  for (std::size_t i = 0; i < steps; ++i) {
    for (std::size_t j = 0; j < steps; ++j) {
      grid.push_back({static_cast<double>(i) / denom,
                      static_cast<double>(j) / denom});
    }
  }
  return grid;
}

std::vector<CoverageReport> sweep(const PopulationModel& base,
                                  std::span<const GridPoint> grid,
                                  unsigned threads) {
  validate(base);
  std::vector<CoverageReport> out(grid.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(grid.size(), 1));

  auto work = [&](unsigned worker) {
    for (std::size_t i = worker; i < grid.size(); i += threads) {
      PopulationModel m = base;
      m.alpha_sc = grid[i].alpha_sc;
      m.alpha_cd = grid[i].alpha_cd;
      m.seed = base.seed + i;
      out[i] = simulate_coverage(m);
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w);
  work(0);
  return out;
}

VisibilityReport infected_visibility(const PopulationModel& model,
                                     const EndToEndRun& run) {
  if (run.people.size() != model.n) {
    throw std::invalid_argument("run has " + std::to_string(run.people.size()) +
                                " people, model expects " +
                                std::to_string(model.n));
  }
  VisibilityReport r;
  for (const IndividualOutcome& p : run.people) {
    if (!p.infected) continue;
    ++r.infected;
    if (p.in_sc && p.published) ++r.authority_known;
    if (p.in_cd || (p.published && p.harvested)) ++r.attacker_known;
  }
  if (r.infected > 0) {
    r.authority_fraction =
        static_cast<double>(r.authority_known) / static_cast<double>(r.infected);
    r.attacker_fraction =
        static_cast<double>(r.attacker_known) / static_cast<double>(r.infected);
  }
  return r;
}

EndToEndRun simulate_population(const PopulationModel& model,
                                const PopulationWorld& pw) {
  validate(model);
  EndToEndRun run;
  run.people.resize(model.n);

  radio::WorldConfig wc;
  wc.tick = pw.tick_s;
  wc.duration = pw.duration_s;
  wc.start_time = pw.start_time;
  wc.radio_range_max = pw.radio_range_m;
  wc.seed = model.seed;
  for (std::size_t i = 0; i < model.n; ++i) {
    const std::string id = "p" + std::to_string(i);
    Rng traits = Rng::derive(model.seed, "traits:" + id);
    auto& person = run.people[i];
    person.in_sc = traits.uniform01() < model.alpha_sc;
    person.in_cd = traits.uniform01() < model.alpha_cd;
    person.infected = traits.uniform01() < model.infected_fraction;

    radio::NodeSpec node;
    node.id = id;
    node.roles = {person.in_sc, person.in_cd};
    Rng moves = Rng::derive(model.seed, "moves:" + id);
    for (double from = 0.0; from < pw.duration_s; from += pw.move_every_s) {
      const double to = std::min(from + pw.move_every_s, pw.duration_s);
      node.trajectory.push_back({from, to,
                                 {moves.uniform01() * pw.area_m,
                                  moves.uniform01() * pw.area_m}});
    }
    wc.nodes.push_back(std::move(node));
  }

  radio::World world(wc);
  std::vector<std::optional<device::Device>> devices(model.n);
  for (std::size_t i = 0; i < model.n; ++i) {
    if (run.people[i].in_sc) devices[i].emplace(wc.nodes[i].id, model.seed);
  }
  attack::AttackerDb db;

  std::vector<radio::Emission> emissions;
  for (std::size_t k = 0; k < world.tick_count(); ++k) {
    const double t = world.time_at(k);
    emissions.clear();
    for (std::size_t i = 0; i < model.n; ++i) {
      if (!devices[i] || !world.position(i, t)) continue;
      if (auto frame = devices[i]->broadcast_current(t)) {
        emissions.push_back(
            {i, frame->mac, beacon::AdvPayload::from(frame->payload)});
      }
    }
    for (const radio::ScanEvent& ev : world.step(t, emissions)) {
      if (run.people[ev.receiver].in_cd) {
        attack::Deputy deputy{wc.nodes[ev.receiver].id, false};
        if (auto rec = deputy.on_scan(ev.sighting)) db.upload(std::move(*rec));
      }
    }
  }

  server::DiagnosisServer diagnosis;
  const double end = wc.start_time + wc.duration;
  std::vector<std::vector<crypto::TemporaryExposureKey>> keys(model.n);
  for (std::size_t i = 0; i < model.n; ++i) {
    if (devices[i] && run.people[i].infected) {
      devices[i]->mark_infected();
      keys[i] = devices[i]->diagnose_and_upload(diagnosis, end);
      run.people[i].published = !keys[i].empty();
    }
  }
  for (std::size_t i = 0; i < model.n; ++i) {
    if (keys[i].empty()) continue;
    for (const attack::Dossier& d : attack::reidentify(db, keys[i])) {
      if (!d.sightings.empty()) run.people[i].harvested = true;
    }
  }
  return run;
}

}  // namespace gaen::utility
