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

#include "gaen/beacon_codec.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace gaen::beacon {
namespace {

constexpr std::uint8_t kAdFlags = 0x01;
constexpr std::uint8_t kAdCompleteUuid16 = 0x03;
constexpr std::uint8_t kAdServiceData16 = 0x16;
constexpr std::uint8_t kAdManufacturerData = 0xFF;

constexpr std::uint8_t kGaenFlags = 0x1A;
constexpr std::uint8_t kBeaconFlags = 0x06;
constexpr std::uint8_t kEddystoneUrlFrame = 0x10;

constexpr std::array<std::string_view, 4> kUrlSchemes = {
    "http://www.", "https://www.", "http://", "https://"};
constexpr std::array<std::string_view, 14> kUrlExpansions = {
    ".com/", ".org/", ".edu/", ".net/", ".info/", ".biz/", ".gov/",
    ".com",  ".org",  ".edu",  ".net",  ".info",  ".biz",  ".gov"};

struct AdStructure {
  std::uint8_t type;
  std::span<const std::uint8_t> data;
};

std::optional<std::vector<AdStructure>> split_ad(
    std::span<const std::uint8_t> payload) {
  std::vector<AdStructure> out;
  std::size_t pos = 0;
  while (pos < payload.size()) {
    const std::size_t len = payload[pos];
    if (len == 0 || pos + 1 + len > payload.size()) return std::nullopt;
    out.push_back({payload[pos + 1], payload.subspan(pos + 2, len - 1)});
    pos += 1 + len;
  }
  return out;
}

void put_ad(Bytes& out, std::uint8_t type, std::span<const std::uint8_t> data) {
  out.push_back(static_cast<std::uint8_t>(data.size() + 1));
  out.push_back(type);
  out.insert(out.end(), data.begin(), data.end());
}

void put_le16(Bytes& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_be16(Bytes& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
}

std::uint16_t le16(std::span<const std::uint8_t> d, std::size_t at) {
  return static_cast<std::uint16_t>(d[at] | (d[at + 1] << 8));
}

std::uint16_t be16(std::span<const std::uint8_t> d, std::size_t at) {
  return static_cast<std::uint16_t>((d[at] << 8) | d[at + 1]);
}

Bytes encode_url_body(std::string_view url, std::uint8_t& scheme_code) {
  std::size_t pos = 0;
  bool found = false;
  // Longer schemes first so "https://www." wins over "https://".
  constexpr std::array<std::uint8_t, 4> kSchemeOrder = {1, 0, 3, 2};
  for (std::uint8_t code : kSchemeOrder) {
    if (url.starts_with(kUrlSchemes[code])) {
      scheme_code = code;
      pos = kUrlSchemes[code].size();
      found = true;
      break;
    }
  }
  if (!found) {
    throw std::invalid_argument("Eddystone URL needs an http(s) scheme: '" +
                                std::string(url) + "'");
  }
  Bytes body;
  while (pos < url.size()) {
    bool expanded = false;
    for (std::size_t code = 0; code < kUrlExpansions.size(); ++code) {
      if (url.substr(pos).starts_with(kUrlExpansions[code])) {
        body.push_back(static_cast<std::uint8_t>(code));
        pos += kUrlExpansions[code].size();
        expanded = true;
        break;
      }
    }
    if (!expanded) {
      const auto c = static_cast<std::uint8_t>(url[pos]);
      if (c <= 0x20 || c >= 0x7f) {
        throw std::invalid_argument("Eddystone URL has unencodable character");
      }
      body.push_back(c);
      ++pos;
    }
  }
  if (body.size() > kMaxEddystoneUrlBody) {
    throw LengthError("Eddystone URL encodes to " + std::to_string(body.size()) +
                      " bytes, limit is " +
                      std::to_string(kMaxEddystoneUrlBody));
  }
  return body;
}

std::optional<std::string> decode_url(std::uint8_t scheme,
                                      std::span<const std::uint8_t> body) {
  if (scheme >= kUrlSchemes.size()) return std::nullopt;
  std::string url(kUrlSchemes[scheme]);
  for (std::uint8_t c : body) {
    if (c < kUrlExpansions.size()) {
      url += kUrlExpansions[c];
    } else if (c > 0x20 && c < 0x7f) {
      url.push_back(static_cast<char>(c));
    } else {
      return std::nullopt;
    }
  }
  return url;
}

Bytes encode_ibeacon(const IBeacon& b) {
  Bytes out;
  const std::uint8_t flags[] = {kBeaconFlags};
  put_ad(out, kAdFlags, flags);
  Bytes mfg;
  put_le16(mfg, kAppleCompanyId);
  mfg.push_back(0x02);  // iBeacon type
  mfg.push_back(0x15);  // remaining length (21)
  mfg.insert(mfg.end(), b.uuid.begin(), b.uuid.end());
  put_be16(mfg, b.major);
  put_be16(mfg, b.minor);
  mfg.push_back(static_cast<std::uint8_t>(b.tx_power));
  put_ad(out, kAdManufacturerData, mfg);
  return out;
}

Bytes encode_altbeacon(const AltBeacon& b) {
  Bytes out;
  const std::uint8_t flags[] = {kBeaconFlags};
  put_ad(out, kAdFlags, flags);
  Bytes mfg;
  put_le16(mfg, b.manufacturer_id);
  mfg.push_back(0xBE);  // beacon code
  mfg.push_back(0xAC);
  mfg.insert(mfg.end(), b.beacon_id.begin(), b.beacon_id.end());
  mfg.push_back(static_cast<std::uint8_t>(b.reference_rssi));
  mfg.push_back(b.reserved);
  put_ad(out, kAdManufacturerData, mfg);
  return out;
}

Bytes encode_eddystone(const EddystoneUrl& b) {
  std::uint8_t scheme = 0;
  const Bytes body = encode_url_body(b.url, scheme);
  Bytes out;
  const std::uint8_t flags[] = {kBeaconFlags};
  put_ad(out, kAdFlags, flags);
  Bytes uuids;
  put_le16(uuids, kEddystoneServiceUuid);
  put_ad(out, kAdCompleteUuid16, uuids);
  Bytes sd;
  put_le16(sd, kEddystoneServiceUuid);
  sd.push_back(kEddystoneUrlFrame);
  sd.push_back(static_cast<std::uint8_t>(b.tx_power));
  sd.push_back(scheme);
  sd.insert(sd.end(), body.begin(), body.end());
  put_ad(out, kAdServiceData16, sd);
  return out;
}

// Field extraction from the characteristic AD structure only; decode()
// re-encodes and compares against the input to reject anything non-canonical.
std::optional<BeaconKind> parse_candidate(const std::vector<AdStructure>& ads) {
  for (const AdStructure& ad : ads) {
    if (ad.type == kAdServiceData16 && ad.data.size() >= 2) {
      const std::uint16_t uuid = le16(ad.data, 0);
      if (uuid == kGaenServiceUuid && ad.data.size() == 22) {
        GaenBeacon g;
        std::copy_n(ad.data.begin() + 2, 16, g.rpi.begin());
        std::copy_n(ad.data.begin() + 18, 4, g.aem.begin());
        return g;
      }
      if (uuid == kEddystoneServiceUuid && ad.data.size() >= 5 &&
          ad.data[2] == kEddystoneUrlFrame) {
        auto url = decode_url(ad.data[4], ad.data.subspan(5));
        if (!url) return std::nullopt;
        return EddystoneUrl{*url, static_cast<std::int8_t>(ad.data[3])};
      }
    }
    if (ad.type == kAdManufacturerData && ad.data.size() >= 4) {
      if (ad.data.size() == 25 && le16(ad.data, 0) == kAppleCompanyId &&
          ad.data[2] == 0x02 && ad.data[3] == 0x15) {
        IBeacon b;
        std::copy_n(ad.data.begin() + 4, 16, b.uuid.begin());
        b.major = be16(ad.data, 20);
        b.minor = be16(ad.data, 22);
        b.tx_power = static_cast<std::int8_t>(ad.data[24]);
        return b;
      }
      if (ad.data.size() == 26 && ad.data[2] == 0xBE && ad.data[3] == 0xAC) {
        AltBeacon b;
        b.manufacturer_id = le16(ad.data, 0);
        std::copy_n(ad.data.begin() + 4, 20, b.beacon_id.begin());
        b.reference_rssi = static_cast<std::int8_t>(ad.data[24]);
        b.reserved = ad.data[25];
        return b;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

AdvPayload AdvPayload::from(std::span<const std::uint8_t> bytes) {
  if (bytes.size() > kMaxLegacyPayload) {
    throw LengthError("advertising payload of " + std::to_string(bytes.size()) +
                      " bytes exceeds 31");
  }
  AdvPayload p;
  std::copy(bytes.begin(), bytes.end(), p.data_.begin());
  p.size_ = static_cast<std::uint8_t>(bytes.size());
  return p;
}

bool AdvPayload::operator==(const AdvPayload& other) const {
  return std::ranges::equal(bytes(), other.bytes());
}

std::string_view kind_name(const BeaconKind& kind) {
  struct Namer {
    std::string_view operator()(const GaenBeacon&) const { return "gaen"; }
    std::string_view operator()(const IBeacon&) const { return "ibeacon"; }
    std::string_view operator()(const AltBeacon&) const { return "altbeacon"; }
    std::string_view operator()(const EddystoneUrl&) const {
      return "eddystone_url";
    }
    std::string_view operator()(const UnknownBeacon&) const {
      return "unknown";
    }
  };
  return std::visit(Namer{}, kind);
}

Bytes encode_gaen(std::span<const std::uint8_t> rpi,
                  std::span<const std::uint8_t> aem) {
  if (rpi.size() != 16) {
    throw LengthError("RPI must be 16 bytes, got " + std::to_string(rpi.size()));
  }
  if (aem.size() != 4) {
    throw LengthError("AEM must be 4 bytes, got " + std::to_string(aem.size()));
  }
  Bytes out;
  out.reserve(kMaxLegacyPayload);
  const std::uint8_t flags[] = {kGaenFlags};
  put_ad(out, kAdFlags, flags);
  Bytes uuids;
  put_le16(uuids, kGaenServiceUuid);
  put_ad(out, kAdCompleteUuid16, uuids);
  Bytes sd;
  put_le16(sd, kGaenServiceUuid);
  sd.insert(sd.end(), rpi.begin(), rpi.end());
  sd.insert(sd.end(), aem.begin(), aem.end());
  put_ad(out, kAdServiceData16, sd);
  return out;
}

Bytes encode_decoy(const DecoyBeacon& decoy) {
  struct Encoder {
    Bytes operator()(const IBeacon& b) const { return encode_ibeacon(b); }
    Bytes operator()(const AltBeacon& b) const { return encode_altbeacon(b); }
    Bytes operator()(const EddystoneUrl& b) const {
      return encode_eddystone(b);
    }
  };
  return std::visit(Encoder{}, decoy);
}

Bytes encode(const BeaconKind& kind) {
  struct Encoder {
    Bytes operator()(const GaenBeacon& g) const {
      return encode_gaen(g.rpi, g.aem);
    }
    Bytes operator()(const IBeacon& b) const { return encode_ibeacon(b); }
    Bytes operator()(const AltBeacon& b) const { return encode_altbeacon(b); }
    Bytes operator()(const EddystoneUrl& b) const {
      return encode_eddystone(b);
    }
    Bytes operator()(const UnknownBeacon& u) const { return u.raw; }
  };
  return std::visit(Encoder{}, kind);
}

BeaconFrame decode(std::span<const std::uint8_t> payload,
                   const MacAddress& mac) {
  BeaconFrame frame{mac, Bytes(payload.begin(), payload.end()),
                    UnknownBeacon{Bytes(payload.begin(), payload.end())}};
  if (payload.empty() || payload.size() > kMaxLegacyPayload) return frame;
  const auto ads = split_ad(payload);
  if (!ads) return frame;
  std::optional<BeaconKind> candidate = parse_candidate(*ads);
  if (!candidate) return frame;
  try {
    if (encode(*candidate) != frame.payload) return frame;
  } catch (const std::invalid_argument&) {
    return frame;
  }
  frame.kind = std::move(*candidate);
  return frame;
}

std::array<std::uint8_t, 16> parse_uuid(std::string_view text) {
  if (text.size() != 36 || text[8] != '-' || text[13] != '-' ||
      text[18] != '-' || text[23] != '-') {
    throw std::invalid_argument("malformed UUID '" + std::string(text) + "'");
  }
  std::string compact;
  for (char c : text) {
    if (c != '-') compact.push_back(c);
  }
  return fixed_from_hex<16>(compact);
}

std::string format_uuid(const std::array<std::uint8_t, 16>& uuid) {
  const std::string hex = to_hex(uuid);
  return hex.substr(0, 8) + "-" + hex.substr(8, 4) + "-" + hex.substr(12, 4) +
         "-" + hex.substr(16, 4) + "-" + hex.substr(20, 12);
}

}  // namespace gaen::beacon
