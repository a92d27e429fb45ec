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

// Legacy BLE advertising payloads (at most 31 bytes): a sequence of AD
// structures, each `length | type | data[length - 1]`.
//
// Recognized kinds and their canonical layouts are documented byte by byte
// in docs/beacon_layouts.md. Decoding is total: anything that is not exactly
// one of the canonical layouts comes back as UnknownBeacon with its raw bytes
// intact, so encode(decode(p)) == p for every payload.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "gaen/bytes.hpp"

namespace gaen::beacon {

inline constexpr std::size_t kMaxLegacyPayload = 31;
inline constexpr std::uint16_t kGaenServiceUuid = 0xFD6F;
inline constexpr std::uint16_t kEddystoneServiceUuid = 0xFEAA;
inline constexpr std::uint16_t kAppleCompanyId = 0x004C;
inline constexpr std::uint16_t kDefaultAltBeaconManufacturer = 0x0118;
/// Longest encoded URL body that still fits a legacy advertisement.
inline constexpr std::size_t kMaxEddystoneUrlBody = 17;

/// Fixed-capacity advertising payload; avoids a heap allocation per sighting.
class AdvPayload {
 public:
  AdvPayload() = default;
  /// Throws LengthError for more than 31 bytes.
  static AdvPayload from(std::span<const std::uint8_t> bytes);

  std::span<const std::uint8_t> bytes() const { return {data_.data(), size_}; }
  std::size_t size() const { return size_; }
  Bytes to_bytes() const { return Bytes(data_.begin(), data_.begin() + size_); }

  bool operator==(const AdvPayload& other) const;

 private:
  std::array<std::uint8_t, kMaxLegacyPayload> data_{};
  std::uint8_t size_ = 0;
};

struct GaenBeacon {
  Block16 rpi{};
  std::array<std::uint8_t, 4> aem{};
  bool operator==(const GaenBeacon&) const = default;
};

struct IBeacon {
  std::array<std::uint8_t, 16> uuid{};
  std::uint16_t major = 0;
  std::uint16_t minor = 0;
  std::int8_t tx_power = -59;  // measured power at 1 m
  bool operator==(const IBeacon&) const = default;
};

struct AltBeacon {
  std::uint16_t manufacturer_id = kDefaultAltBeaconManufacturer;
  std::array<std::uint8_t, 20> beacon_id{};
  std::int8_t reference_rssi = -59;
  std::uint8_t reserved = 0;
  bool operator==(const AltBeacon&) const = default;
};

struct EddystoneUrl {
  std::string url;
  std::int8_t tx_power = -20;  // calibrated power at 0 m
  bool operator==(const EddystoneUrl&) const = default;
};

struct UnknownBeacon {
  Bytes raw;
  bool operator==(const UnknownBeacon&) const = default;
};

using BeaconKind =
    std::variant<GaenBeacon, IBeacon, AltBeacon, EddystoneUrl, UnknownBeacon>;
using DecoyBeacon = std::variant<IBeacon, AltBeacon, EddystoneUrl>;

struct BeaconFrame {
  MacAddress mac;
  Bytes payload;
  BeaconKind kind;
  bool operator==(const BeaconFrame&) const = default;
};

/// "gaen", "ibeacon", "altbeacon", "eddystone_url" or "unknown".
std::string_view kind_name(const BeaconKind& kind);

/// Flags, complete 16-bit UUID list [0xFD6F], service data 0xFD6F||rpi||aem.
/// Throws LengthError unless rpi is 16 bytes and aem is 4 bytes.
Bytes encode_gaen(std::span<const std::uint8_t> rpi,
                  std::span<const std::uint8_t> aem);

/// Throws LengthError if an Eddystone URL does not fit, std::invalid_argument
/// if it has no recognized scheme prefix.
Bytes encode_decoy(const DecoyBeacon& decoy);

/// Canonical bytes for any kind; UnknownBeacon yields its raw bytes.
Bytes encode(const BeaconKind& kind);

/// Never throws. Payloads longer than 31 bytes are Unknown.
BeaconFrame decode(std::span<const std::uint8_t> payload,
                   const MacAddress& mac);

/// Standard 8-4-4-4-12 textual UUID.
std::array<std::uint8_t, 16> parse_uuid(std::string_view text);
std::string format_uuid(const std::array<std::uint8_t, 16>& uuid);

}  // namespace gaen::beacon
