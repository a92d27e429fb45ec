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

// Python bindings. Byte strings cross the boundary as `bytes`; everything
// richer comes back as plain dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "gaen/beacon_codec.hpp"
#include "gaen/crypto.hpp"
#include "gaen/radio_sim.hpp"
#include "gaen/report.hpp"
#include "gaen/scenario.hpp"
#include "gaen/utility_model.hpp"

namespace py = pybind11;
using namespace gaen;

namespace {

template <std::size_t N>
std::array<std::uint8_t, N> fixed(const py::bytes& b, const char* what) {
  const std::string s = b;
  if (s.size() != N) {
    throw LengthError(std::string(what) + ": expected " + std::to_string(N) +
                      " bytes, got " + std::to_string(s.size()));
  }
  std::array<std::uint8_t, N> out{};
  std::copy(s.begin(), s.end(), out.begin());
  return out;
}

template <typename C>
py::bytes to_py(const C& c) {
  return py::bytes(reinterpret_cast<const char*>(c.data()), c.size());
}

Bytes from_py(const py::bytes& b) {
  const std::string s = b;
  return Bytes(s.begin(), s.end());
}

py::dict frame_dict(const beacon::BeaconFrame& f) {
  py::dict d;
  d["kind"] = std::string(beacon::kind_name(f.kind));
  d["mac"] = f.mac.to_string();
  d["payload"] = to_py(f.payload);
  std::visit(
      [&](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, beacon::GaenBeacon>) {
          d["rpi"] = to_py(k.rpi);
          d["aem"] = to_py(k.aem);
        } else if constexpr (std::is_same_v<T, beacon::IBeacon>) {
          d["uuid"] = beacon::format_uuid(k.uuid);
          d["major"] = k.major;
          d["minor"] = k.minor;
          d["tx_power"] = static_cast<int>(k.tx_power);
        } else if constexpr (std::is_same_v<T, beacon::AltBeacon>) {
          d["manufacturer_id"] = k.manufacturer_id;
          d["beacon_id"] = to_py(k.beacon_id);
          d["reference_rssi"] = static_cast<int>(k.reference_rssi);
          d["reserved"] = k.reserved;
        } else if constexpr (std::is_same_v<T, beacon::EddystoneUrl>) {
          d["url"] = k.url;
          d["tx_power"] = static_cast<int>(k.tx_power);
        } else {
          d["raw"] = to_py(k.raw);
        }
      },
      f.kind);
  return d;
}

py::dict coverage_dict(const utility::CoverageReport& r) {
  py::dict d;
  d["alpha_sc"] = r.alpha_sc;
  d["alpha_cd"] = r.alpha_cd;
  d["seed"] = r.seed;
  d["n_contacts"] = r.n_contacts;
  d["sc_detected"] = r.sc_detected;
  d["attacker_two_sided"] = r.attacker_two_sided;
  d["attacker_one_sided"] = r.attacker_one_sided;
  d["sc_coverage"] = r.sc_coverage;
  d["attacker_coverage"] = r.attacker_coverage;
  d["attacker_individual_coverage"] = r.attacker_individual_coverage;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exposure-notification simulator and attack harness";

  auto value_error = py::handle(PyExc_ValueError);
  static py::exception<LengthError> length_error(m, "LengthError", value_error);
  static py::exception<crypto::AlignmentError> alignment_error(m, "AlignmentError", value_error);
  static py::exception<crypto::DomainError> domain_error(m, "DomainError", value_error);
  static py::exception<radio::DomainError> radio_domain_error(m, "RadioDomainError", value_error);
  static py::exception<scenario::ConfigError> config_error(m, "ConfigError", value_error);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const LengthError& e) {
      py::set_error(length_error, e.what());
    } catch (const crypto::AlignmentError& e) {
      py::set_error(alignment_error, e.what());
    } catch (const crypto::DomainError& e) {
      py::set_error(domain_error, e.what());
    } catch (const radio::DomainError& e) {
      py::set_error(radio_domain_error, e.what());
    } catch (const scenario::ConfigError& e) {
      py::set_error(config_error, e.what());
    }
  });

  // crypto
  m.attr("INTERVAL_SECONDS") = crypto::kIntervalSeconds;
  m.attr("ROLLING_PERIOD") = crypto::kRollingPeriod;
  m.def("interval_number", &crypto::interval_number, py::arg("unix_seconds"));
  m.def(
      "derive_rpik",
      [](const py::bytes& tek, crypto::IntervalNumber rolling_start) {
        return to_py(crypto::derive_rpik(crypto::TemporaryExposureKey::make(
                                             fixed<16>(tek, "tek"), rolling_start))
                         .bytes);
      },
      py::arg("tek"), py::arg("rolling_start") = 0);
  m.def(
      "derive_aemk",
      [](const py::bytes& tek, crypto::IntervalNumber rolling_start) {
        return to_py(crypto::derive_aemk(crypto::TemporaryExposureKey::make(
                                             fixed<16>(tek, "tek"), rolling_start))
                         .bytes);
      },
      py::arg("tek"), py::arg("rolling_start") = 0);
  m.def(
      "generate_rpi",
      [](const py::bytes& rpik, crypto::IntervalNumber interval) {
        return to_py(crypto::generate_rpi({fixed<16>(rpik, "rpik")}, interval).value);
      },
      py::arg("rpik"), py::arg("interval"));
  m.def(
      "encrypt_aem",
      [](const py::bytes& aemk, const py::bytes& rpi, const py::bytes& metadata) {
        const auto meta = crypto::Metadata::from_bytes(fixed<4>(metadata, "metadata"));
        return to_py(
            crypto::encrypt_aem({fixed<16>(aemk, "aemk")}, fixed<16>(rpi, "rpi"), meta)
                .ciphertext);
      },
      py::arg("aemk"), py::arg("rpi"), py::arg("metadata"));
  m.def(
      "decrypt_aem",
      [](const py::bytes& aemk, const py::bytes& rpi, const py::bytes& aem) {
        return to_py(crypto::decrypt_aem({fixed<16>(aemk, "aemk")}, fixed<16>(rpi, "rpi"),
                                         {fixed<4>(aem, "aem")})
                         .to_bytes());
      },
      py::arg("aemk"), py::arg("rpi"), py::arg("aem"));
  m.def(
      "metadata",
      [](int tx_power) { return to_py(crypto::Metadata::with_tx_power(tx_power).to_bytes()); },
      py::arg("tx_power"));

  // beacon codec
  m.def(
      "decode",
      [](const py::bytes& payload, const std::string& mac) {
        return frame_dict(beacon::decode(from_py(payload), MacAddress::parse(mac)));
      },
      py::arg("payload"), py::arg("mac") = "00:00:00:00:00:00");
  m.def(
      "encode_gaen",
      [](const py::bytes& rpi, const py::bytes& aem) {
        return to_py(beacon::encode_gaen(from_py(rpi), from_py(aem)));
      },
      py::arg("rpi"), py::arg("aem"));

  // radio
  m.def(
      "propagate",
      [](double tx, double distance, double noise, double ref_rssi, double exponent,
         double range) {
        return radio::propagate(tx, distance, noise, {ref_rssi, exponent, 0.0}, range);
      },
      py::arg("tx_power_dbm"), py::arg("distance_m"), py::arg("noise_db") = 0.0,
      py::arg("ref_rssi_at_1m") = -41.0, py::arg("exponent") = 2.0,
      py::arg("radio_range_max") = 30.0);
  m.def("attenuation", &radio::attenuation, py::arg("claimed_tx_power_dbm"),
        py::arg("rssi_dbm"));

  // utility model
  m.def(
      "simulate_coverage",
      [](std::size_t n, std::size_t contacts, double alpha_sc, double alpha_cd,
         std::uint64_t seed, double one_sided_quality) {
        utility::PopulationModel pm;
        pm.n = n;
        pm.contacts = contacts;
        pm.alpha_sc = alpha_sc;
        pm.alpha_cd = alpha_cd;
        pm.seed = seed;
        pm.one_sided_quality = one_sided_quality;
        py::gil_scoped_release release;
        auto r = utility::simulate_coverage(pm);
        py::gil_scoped_acquire acquire;
        return coverage_dict(r);
      },
      py::arg("n"), py::arg("contacts"), py::arg("alpha_sc"), py::arg("alpha_cd"),
      py::arg("seed") = 0, py::arg("one_sided_quality") = 1.0);

  // test vectors
  m.def(
      "test_vectors",
      [](std::size_t count, std::uint64_t seed) {
        py::list out;
        for (const auto& v : report::make_test_vectors(count, seed)) {
          py::dict d;
          d["tek"] = to_py(v.tek.key);
          d["rolling_start"] = v.tek.rolling_start;
          d["interval"] = v.interval;
          d["rpik"] = to_py(v.rpik.bytes);
          d["rpi"] = to_py(v.rpi);
          d["aemk"] = to_py(v.aemk.bytes);
          d["metadata"] = to_py(v.metadata);
          d["aem"] = to_py(v.aem);
          out.append(d);
        }
        return out;
      },
      py::arg("count"), py::arg("seed") = 1);

  // scenarios
  m.def(
      "run_scenario",
      [](const std::string& path, std::optional<std::string> out_dir,
         std::optional<std::uint64_t> seed) {
        auto cfg = scenario::load_config(path);
        if (seed) {
          cfg.seed = *seed;
          cfg.world.seed = *seed;
          if (cfg.coverage) cfg.coverage->seed = *seed;
          if (cfg.visibility) cfg.visibility->seed = *seed;
        }
        std::optional<scenario::ScenarioResult> result;
        std::vector<std::string> files;
        {
          py::gil_scoped_release release;
          result = scenario::run(cfg);
          if (out_dir) files = report::write_artifacts(*result, *out_dir);
        }
        py::list notes;
        for (const auto& n : result->notifications) {
          py::dict d;
          d["device_id"] = n.device_id;
          d["tek_owner"] = n.tek_owner;
          d["day"] = n.day;
          d["duration_s"] = n.duration_s;
          d["min_attenuation_db"] = n.min_attenuation_db;
          d["ground_truth_contact"] = n.ground_truth_contact;
          notes.append(d);
        }
        py::dict d;
        d["summary"] = report::summary_json(*result);
        d["notifications"] = notes;
        d["files"] = files;
        return d;
      },
      py::arg("path"), py::arg("out_dir") = py::none(), py::arg("seed") = py::none());
}
