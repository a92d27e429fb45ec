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

#include "gaen/bytes.hpp"

namespace gaen {
namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string to_hex(std::span<const std::uint8_t> bytes) {
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kHexDigits[b >> 4]);
    out.push_back(kHexDigits[b & 0x0f]);
  }
  return out;
}

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) {
    throw std::invalid_argument("hex string has odd length");
  }
  Bytes out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const int hi = nibble(hex[i]);
    const int lo = nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) {
      throw std::invalid_argument("invalid hex digit in '" + std::string(hex) +
                                  "'");
    }
    out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
  }
  return out;
}

MacAddress MacAddress::parse(std::string_view text) {
  // AA:BB:CC:DD:EE:FF
  if (text.size() != 17) {
    throw std::invalid_argument("malformed MAC address '" + std::string(text) +
                                "'");
  }
  MacAddress mac;
  for (std::size_t i = 0; i < 6; ++i) {
    const std::size_t pos = i * 3;
    if (i > 0 && text[pos - 1] != ':') {
      throw std::invalid_argument("malformed MAC address '" +
                                  std::string(text) + "'");
    }
    const int hi = nibble(text[pos]);
    const int lo = nibble(text[pos + 1]);
    if (hi < 0 || lo < 0) {
      throw std::invalid_argument("malformed MAC address '" +
                                  std::string(text) + "'");
    }
    mac.octets[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return mac;
}

std::string MacAddress::to_string() const {
  static constexpr char kUpper[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(17);
  for (std::size_t i = 0; i < octets.size(); ++i) {
    if (i > 0) out.push_back(':');
    out.push_back(kUpper[octets[i] >> 4]);
    out.push_back(kUpper[octets[i] & 0x0f]);
  }
  return out;
}

}  // namespace gaen
