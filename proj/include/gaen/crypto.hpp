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

// Exposure Notification key schedule and beacon cryptography.
//
//   RPIK = HKDF-SHA256(TEK, salt = empty, info = "EN-RPIK", 16)
//   AEMK = HKDF-SHA256(TEK, salt = empty, info = "EN-AEMK", 16)
//   RPI  = AES-128-ECB(RPIK, "EN-RPI" || 00 x 6 || LE32(interval))
//   AEM  = AES-128-CTR(AEMK, counter block = RPI, metadata)
//
// The AEM carries no authentication tag. Flipping a ciphertext bit flips the
// same plaintext bit after decryption, and nothing on the receiving side can
// notice.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gaen/bytes.hpp"
#include "gaen/rng.hpp"

namespace gaen::crypto {

/// Number of 10-minute intervals since the Unix epoch.
using IntervalNumber = std::uint32_t;

inline constexpr std::uint32_t kIntervalSeconds = 600;
inline constexpr std::uint32_t kRollingPeriod = 144;  // intervals per TEK
inline constexpr std::uint8_t kMetadataVersion = 0x40;

class AlignmentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// floor(unix_seconds / 600). Negative times are rejected.
IntervalNumber interval_number(double unix_seconds);

inline constexpr double interval_start_seconds(IntervalNumber i) {
  return static_cast<double>(i) * kIntervalSeconds;
}

struct TemporaryExposureKey {
  Block16 key{};
  IntervalNumber rolling_start = 0;

  /// Throws AlignmentError unless rolling_start is a multiple of 144.
  static TemporaryExposureKey make(const Block16& key,
                                   IntervalNumber rolling_start);

  IntervalNumber day() const { return rolling_start / kRollingPeriod; }
  bool covers(IntervalNumber i) const {
    return i >= rolling_start && i < rolling_start + kRollingPeriod;
  }

  auto operator<=>(const TemporaryExposureKey&) const = default;
};

struct RpiKey {
  Block16 bytes{};
  auto operator<=>(const RpiKey&) const = default;
};

struct AemKey {
  Block16 bytes{};
  auto operator<=>(const AemKey&) const = default;
};

struct RollingProximityIdentifier {
  Block16 value{};
  IntervalNumber interval = 0;
  auto operator<=>(const RollingProximityIdentifier&) const = default;
};

struct AssociatedEncryptedMetadata {
  std::array<std::uint8_t, 4> ciphertext{};
  auto operator<=>(const AssociatedEncryptedMetadata&) const = default;
};

/// Plaintext metadata: version, signed transmit power (dBm), two reserved
/// bytes. Decryption returns whatever bytes come out, so a decrypted value may
/// hold tx_power == -128; only with_tx_power() enforces [-127, 127].
struct Metadata {
  std::uint8_t version = kMetadataVersion;
  std::int8_t tx_power = 0;
  std::array<std::uint8_t, 2> reserved{};

  static Metadata with_tx_power(int dbm);
  std::array<std::uint8_t, 4> to_bytes() const;
  static Metadata from_bytes(const std::array<std::uint8_t, 4>& b);

  auto operator<=>(const Metadata&) const = default;
};

/// 16 bytes from `rng`. Throws AlignmentError if day_start % 144 != 0.
TemporaryExposureKey new_tek(Rng& rng, IntervalNumber day_start);

RpiKey derive_rpik(const TemporaryExposureKey& tek);
AemKey derive_aemk(const TemporaryExposureKey& tek);

/// The 16-byte block that is encrypted to form an RPI.
Block16 padded_rpi_block(IntervalNumber interval);

RollingProximityIdentifier generate_rpi(const RpiKey& rpik,
                                        IntervalNumber interval);

/// All 144 RPIs of the TEK's day, in interval order.
std::vector<RollingProximityIdentifier> regenerate_day(
    const TemporaryExposureKey& tek);

AssociatedEncryptedMetadata encrypt_aem(const AemKey& aemk,
                                        const Block16& rpi,
                                        const Metadata& meta);

/// Never fails: any 4-byte input decrypts to some metadata.
Metadata decrypt_aem(const AemKey& aemk, const Block16& rpi,
                     const AssociatedEncryptedMetadata& aem);

}  // namespace gaen::crypto
