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

// Output artifacts. Every writer is deterministic: the same result yields
// byte-identical files.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gaen/crypto.hpp"
#include "gaen/scenario.hpp"

namespace gaen::report {

struct TestVector {
  crypto::TemporaryExposureKey tek;
  crypto::IntervalNumber interval = 0;
  crypto::RpiKey rpik;
  Block16 rpi{};
  crypto::AemKey aemk;
  std::array<std::uint8_t, 4> metadata{};
  std::array<std::uint8_t, 4> aem{};
};

/// `count` vectors from random TEKs, intervals and tx powers drawn from seed.
std::vector<TestVector> make_test_vectors(std::size_t count, std::uint64_t seed);

/// One JSON object per line with keys tek_hex, rolling_start, interval,
/// rpik_hex, rpi_hex, aemk_hex, meta_hex, aem_hex.
void write_test_vectors(std::ostream& out, std::span<const TestVector> vectors);

/// Inverse of write_test_vectors(). Throws std::runtime_error on bad input.
std::vector<TestVector> read_test_vectors(std::istream& in);

/// Writes every artifact of a run into `dir` (created if needed) and returns
/// the file names written, in a fixed order.
std::vector<std::string> write_artifacts(const scenario::ScenarioResult& result,
                                         const std::filesystem::path& dir);

/// Compact run summary (counts and headline numbers) as a JSON string.
std::string summary_json(const scenario::ScenarioResult& result);

}  // namespace gaen::report
