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
#include <random>
#include <span>
#include <string_view>

namespace gaen {

/// The single random source used for all simulation randomness.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The standard library distributions are not (their algorithms are
/// implementation-defined), so every derived quantity below is computed here
/// from raw engine output. Identical seeds give identical streams on every
/// conforming platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for a named sub-component, e.g. one per device.
  /// Derived from the parent seed and the label only; it does not consume
  /// parent state.
  static Rng derive(std::uint64_t seed, std::string_view label);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 bits of resolution.
  double uniform01();

  /// Uniform in [0, bound). bound must be > 0.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Standard normal draw (Box-Muller, one value per call).
  double normal();

  void fill(std::span<std::uint8_t> out);

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; used to spread seeds.
std::uint64_t mix64(std::uint64_t x);

}  // namespace gaen
