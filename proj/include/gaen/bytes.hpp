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

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gaen {

using Bytes = std::vector<std::uint8_t>;
using Block16 = std::array<std::uint8_t, 16>;

/// Raised when a byte string has the wrong length for the structure it fills.
class LengthError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string to_hex(std::span<const std::uint8_t> bytes);

/// Parses lower- or upper-case hex. Throws std::invalid_argument on odd
/// length or non-hex characters.
Bytes from_hex(std::string_view hex);

template <std::size_t N>
std::array<std::uint8_t, N> fixed_from_hex(std::string_view hex) {
  const Bytes raw = from_hex(hex);
  if (raw.size() != N) {
    throw LengthError("expected " + std::to_string(N) + " bytes, got " +
                      std::to_string(raw.size()));
  }
  std::array<std::uint8_t, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = raw[i];
  return out;
}

template <std::size_t N>
std::array<std::uint8_t, N> fixed_from_span(std::span<const std::uint8_t> in) {
  if (in.size() != N) {
    throw LengthError("expected " + std::to_string(N) + " bytes, got " +
                      std::to_string(in.size()));
  }
  std::array<std::uint8_t, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = in[i];
  return out;
}

struct Block16Hash {
  std::size_t operator()(const Block16& b) const noexcept {
    std::uint64_t h = 0;
    for (std::size_t i = 0; i < 8; ++i) h = (h << 8) | b[i];
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// 48-bit Bluetooth device address, most significant octet first (the order
/// it is printed in, e.g. "AB:B1:E9:9E:1B:BA").
struct MacAddress {
  std::array<std::uint8_t, 6> octets{};

  static MacAddress parse(std::string_view text);
  std::string to_string() const;

  auto operator<=>(const MacAddress&) const = default;
};

}  // namespace gaen
