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

// gaen-sim: run scenarios, sweeps, and emit crypto test vectors.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gaen/beacon_codec.hpp"
#include "gaen/report.hpp"
#include "gaen/scenario.hpp"

namespace {

namespace fs = std::filesystem;
using namespace gaen;

struct RunOptions {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
};

fs::path output_dir(const RunOptions& opt, const scenario::ScenarioConfig& cfg) {
  if (!opt.out.empty()) return opt.out;
  if (!cfg.output_dir.empty()) return cfg.output_dir;
  return fs::path("out") / cfg.name;
}

scenario::ScenarioConfig load(const RunOptions& opt) {
  auto cfg = scenario::load_config(opt.config);
  if (opt.seed) {
    cfg.seed = *opt.seed;
    cfg.world.seed = *opt.seed;
    if (cfg.coverage) cfg.coverage->seed = *opt.seed;
    if (cfg.visibility) cfg.visibility->seed = *opt.seed;
  }
  return cfg;
}

int do_run(const RunOptions& opt, bool sweep_only) {
  const auto cfg = load(opt);
  const auto result = sweep_only ? scenario::run_sweep(cfg) : scenario::run(cfg);
  const fs::path dir = output_dir(opt, cfg);
  const auto files = report::write_artifacts(result, dir);
  std::cout << report::summary_json(result) << '\n';
  std::cerr << "wrote " << files.size() << " files to " << dir.string() << '\n';
  return 0;
}

int do_vectors(std::size_t count, std::uint64_t seed, const std::string& out) {
  const auto vectors = report::make_test_vectors(count, seed);
  if (out.empty() || out == "-") {
    report::write_test_vectors(std::cout, vectors);
  } else {
    fs::create_directories(out);
    const fs::path file = fs::path(out) / "test_vectors.jsonl";
    std::ofstream f(file, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write '" + file.string() + "'");
    report::write_test_vectors(f, vectors);
  }
  return 0;
}

int do_decode(const std::string& hex, const std::string& mac) {
  const Bytes payload = from_hex(hex);
  const auto frame = beacon::decode(payload, MacAddress::parse(mac));
  std::cout << beacon::kind_name(frame.kind) << ' ' << frame.mac.to_string()
            << ' ' << to_hex(beacon::encode(frame.kind)) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exposure-notification simulator and attack harness"};
  app.require_subcommand(1);

  RunOptions run_opt;
  std::uint64_t seed_value = 0;
  auto* run = app.add_subcommand("run", "Run a scenario and write its artifacts");
  run->add_option("config", run_opt.config, "Scenario JSON")->required()->check(CLI::ExistingFile);
  run->add_option("--out", run_opt.out, "Output directory");
  auto* run_seed = run->add_option("--seed", seed_value, "Override the scenario seed");

  RunOptions sweep_opt;
  std::uint64_t sweep_seed = 0;
  auto* sweep = app.add_subcommand("sweep", "Run only the coverage/visibility sweeps");
  sweep->add_option("config", sweep_opt.config, "Scenario JSON")->required()->check(CLI::ExistingFile);
  sweep->add_option("--out", sweep_opt.out, "Output directory");
  auto* sweep_seed_opt = sweep->add_option("--seed", sweep_seed, "Override the seed");

  std::size_t count = 1000;
  std::uint64_t vec_seed = 1;
  std::string vec_out;
  auto* vectors = app.add_subcommand("vectors", "Emit crypto test vectors as JSON lines");
  vectors->add_option("--count", count, "Number of vectors")->check(CLI::PositiveNumber);
  vectors->add_option("--seed", vec_seed, "RNG seed");
  vectors->add_option("--out", vec_out, "Output directory (default: stdout)");

  std::string hex, mac = "00:00:00:00:00:00";
  auto* decode = app.add_subcommand("decode", "Classify a raw advertising payload");
  decode->add_option("payload_hex", hex, "Payload bytes as hex")->required();
  decode->add_option("--mac", mac, "Advertiser address");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      if (*run_seed) run_opt.seed = seed_value;
      return do_run(run_opt, false);
    }
    if (sweep->parsed()) {
      if (*sweep_seed_opt) sweep_opt.seed = sweep_seed;
      return do_run(sweep_opt, true);
    }
    if (vectors->parsed()) return do_vectors(count, vec_seed, vec_out);
    if (decode->parsed()) return do_decode(hex, mac);
  } catch (const scenario::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
