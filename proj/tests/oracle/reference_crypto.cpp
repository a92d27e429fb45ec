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

#include "reference_crypto.hpp"

#include <stdexcept>
#include <string>

namespace oracle {
namespace {

// GF(2^8) arithmetic, modulus x^8 + x^4 + x^3 + x + 1.
std::uint8_t xtime(std::uint8_t a) {
  return static_cast<std::uint8_t>((a << 1) ^ ((a & 0x80) ? 0x1b : 0));
}

std::uint8_t gmul(std::uint8_t a, std::uint8_t b) {
  std::uint8_t p = 0;
  while (b) {
    if (b & 1) p ^= a;
    a = xtime(a);
    b >>= 1;
  }
  return p;
}

std::uint8_t ginv(std::uint8_t a) {
  if (a == 0) return 0;
  // a^254
  std::uint8_t r = 1;
  for (int i = 0; i < 254; ++i) r = gmul(r, a);
  return r;
}

std::uint8_t rotl8(std::uint8_t x, int s) {
  return static_cast<std::uint8_t>((x << s) | (x >> (8 - s)));
}

// S-box computed from its definition rather than copied as a table.
const std::array<std::uint8_t, 256>& sbox() {
  static const std::array<std::uint8_t, 256> box = [] {
    std::array<std::uint8_t, 256> s{};
    for (int i = 0; i < 256; ++i) {
      const std::uint8_t b = ginv(static_cast<std::uint8_t>(i));
      s[i] = static_cast<std::uint8_t>(b ^ rotl8(b, 1) ^ rotl8(b, 2) ^
                                       rotl8(b, 3) ^ rotl8(b, 4) ^ 0x63);
    }
    return s;
  }();
  return box;
}

std::array<Block, 11> expand_key(const Block& key) {
  const auto& s = sbox();
  std::array<std::uint8_t, 176> w{};
  for (int i = 0; i < 16; ++i) w[i] = key[i];
  std::uint8_t rcon = 1;
  for (int i = 16; i < 176; i += 4) {
    std::uint8_t t[4] = {w[i - 4], w[i - 3], w[i - 2], w[i - 1]};
    if (i % 16 == 0) {
      const std::uint8_t first = t[0];
      t[0] = static_cast<std::uint8_t>(s[t[1]] ^ rcon);
      t[1] = s[t[2]];
      t[2] = s[t[3]];
      t[3] = s[first];
      rcon = xtime(rcon);
    }
    for (int j = 0; j < 4; ++j) w[i + j] = w[i - 16 + j] ^ t[j];
  }
  std::array<Block, 11> rk{};
  for (int r = 0; r < 11; ++r) {
    for (int j = 0; j < 16; ++j) rk[r][j] = w[r * 16 + j];
  }
  return rk;
}

// State is column-major: state[c * 4 + r].
void add_round_key(Block& st, const Block& k) {
  for (int i = 0; i < 16; ++i) st[i] ^= k[i];
}

void sub_bytes(Block& st) {
  for (auto& b : st) b = sbox()[b];
}

void shift_rows(Block& st) {
  Block o = st;
  for (int c = 0; c < 4; ++c) {
    for (int r = 0; r < 4; ++r) o[c * 4 + r] = st[((c + r) % 4) * 4 + r];
  }
  st = o;
}

void mix_columns(Block& st) {
  for (int c = 0; c < 4; ++c) {
    std::uint8_t* a = &st[c * 4];
    const std::uint8_t a0 = a[0], a1 = a[1], a2 = a[2], a3 = a[3];
    a[0] = static_cast<std::uint8_t>(gmul(a0, 2) ^ gmul(a1, 3) ^ a2 ^ a3);
    a[1] = static_cast<std::uint8_t>(a0 ^ gmul(a1, 2) ^ gmul(a2, 3) ^ a3);
    a[2] = static_cast<std::uint8_t>(a0 ^ a1 ^ gmul(a2, 2) ^ gmul(a3, 3));
    a[3] = static_cast<std::uint8_t>(gmul(a0, 3) ^ a1 ^ a2 ^ gmul(a3, 2));
  }
}

std::uint32_t rotr(std::uint32_t x, int n) { return (x >> n) | (x << (32 - n)); }

constexpr std::uint32_t kSha256K[64] = {
    0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1,
    0x923f82a4, 0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3,
    0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786,
    0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
    0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147,
    0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13,
    0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
    0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
    0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a,
    0x5b9cca4f, 0x682e6ff3, 0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208,
    0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};

}  // namespace

Block aes128_encrypt(const Block& key, const Block& plaintext) {
  const auto rk = expand_key(key);
  Block st = plaintext;
  add_round_key(st, rk[0]);
  for (int r = 1; r < 10; ++r) {
    sub_bytes(st);
    shift_rows(st);
    mix_columns(st);
    add_round_key(st, rk[r]);
  }
  sub_bytes(st);
  shift_rows(st);
  add_round_key(st, rk[10]);
  return st;
}

Bytes aes128_ctr(const Block& key, const Block& iv, const Bytes& data) {
  Bytes out(data.size());
  Block counter = iv;
  for (std::size_t off = 0; off < data.size(); off += 16) {
    const Block ks = aes128_encrypt(key, counter);
    for (std::size_t i = 0; i < 16 && off + i < data.size(); ++i) {
      out[off + i] = data[off + i] ^ ks[i];
    }
    for (int i = 15; i >= 0; --i) {
      if (++counter[i] != 0) break;
    }
  }
  return out;
}

std::array<std::uint8_t, 32> sha256(const Bytes& msg) {
  std::uint32_t h[8] = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                        0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};
  Bytes m = msg;
  const std::uint64_t bits = static_cast<std::uint64_t>(msg.size()) * 8;
  m.push_back(0x80);
  while (m.size() % 64 != 56) m.push_back(0);
  for (int i = 7; i >= 0; --i) m.push_back(static_cast<std::uint8_t>(bits >> (i * 8)));

  for (std::size_t blk = 0; blk < m.size(); blk += 64) {
    std::uint32_t w[64];
    for (int i = 0; i < 16; ++i) {
      w[i] = (std::uint32_t{m[blk + 4 * i]} << 24) | (std::uint32_t{m[blk + 4 * i + 1]} << 16) |
             (std::uint32_t{m[blk + 4 * i + 2]} << 8) | m[blk + 4 * i + 3];
    }
    for (int i = 16; i < 64; ++i) {
      const std::uint32_t s0 = rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
      const std::uint32_t s1 = rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
      w[i] = w[i - 16] + s0 + w[i - 7] + s1;
    }
    std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4], f = h[5],
                  g = h[6], hh = h[7];
    for (int i = 0; i < 64; ++i) {
      const std::uint32_t S1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
      const std::uint32_t ch = (e & f) ^ (~e & g);
      const std::uint32_t t1 = hh + S1 + ch + kSha256K[i] + w[i];
      const std::uint32_t S0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
      const std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
      const std::uint32_t t2 = S0 + maj;
      hh = g;
      g = f;
      f = e;
      e = d + t1;
      d = c;
      c = b;
      b = a;
      a = t1 + t2;
    }
    h[0] += a; h[1] += b; h[2] += c; h[3] += d;
    h[4] += e; h[5] += f; h[6] += g; h[7] += hh;
  }
  std::array<std::uint8_t, 32> out{};
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 4; ++j) out[i * 4 + j] = static_cast<std::uint8_t>(h[i] >> (24 - 8 * j));
  }
  return out;
}

std::array<std::uint8_t, 32> hmac_sha256(const Bytes& key, const Bytes& msg) {
  Bytes k = key;
  if (k.size() > 64) {
    const auto d = sha256(k);
    k.assign(d.begin(), d.end());
  }
  k.resize(64, 0);
  Bytes inner(64), outer(64);
  for (int i = 0; i < 64; ++i) {
    inner[i] = k[i] ^ 0x36;
    outer[i] = k[i] ^ 0x5c;
  }
  inner.insert(inner.end(), msg.begin(), msg.end());
  const auto ih = sha256(inner);
  outer.insert(outer.end(), ih.begin(), ih.end());
  return sha256(outer);
}

Bytes hkdf_sha256(const Bytes& ikm, const Bytes& salt, const Bytes& info,
                  std::size_t length) {
  const Bytes s = salt.empty() ? Bytes(32, 0) : salt;
  const auto prk_arr = hmac_sha256(s, ikm);
  const Bytes prk(prk_arr.begin(), prk_arr.end());
  Bytes okm, t;
  for (std::uint8_t counter = 1; okm.size() < length; ++counter) {
    Bytes msg = t;
    msg.insert(msg.end(), info.begin(), info.end());
    msg.push_back(counter);
    const auto block = hmac_sha256(prk, msg);
    t.assign(block.begin(), block.end());
    okm.insert(okm.end(), t.begin(), t.end());
  }
  okm.resize(length);
  return okm;
}

namespace {
Block derive16(const Block& tek, std::string_view label) {
  const Bytes okm = hkdf_sha256(Bytes(tek.begin(), tek.end()), {},
                                Bytes(label.begin(), label.end()), 16);
  Block b{};
  for (int i = 0; i < 16; ++i) b[i] = okm[i];
  return b;
}
}  // namespace

Block rpik(const Block& tek) { return derive16(tek, "EN-RPIK"); }
Block aemk(const Block& tek) { return derive16(tek, "EN-AEMK"); }

Block rpi(const Block& rpik, std::uint32_t interval) {
  Block p{'E', 'N', '-', 'R', 'P', 'I'};
  for (int i = 0; i < 4; ++i) p[12 + i] = static_cast<std::uint8_t>(interval >> (8 * i));
  return aes128_encrypt(rpik, p);
}

std::array<std::uint8_t, 4> aem(const Block& aemk, const Block& rpi,
                                const std::array<std::uint8_t, 4>& metadata) {
  const Bytes ct = aes128_ctr(aemk, rpi, Bytes(metadata.begin(), metadata.end()));
  return {ct[0], ct[1], ct[2], ct[3]};
}

Bytes unhex(std::string_view hex) {
  auto nib = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("bad hex digit");
  };
  if (hex.size() % 2) throw std::invalid_argument("odd hex length");
  Bytes out;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    out.push_back(static_cast<std::uint8_t>(nib(hex[i]) << 4 | nib(hex[i + 1])));
  }
  return out;
}

std::string hex(const std::uint8_t* data, std::size_t n) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    s += digits[data[i] >> 4];
    s += digits[data[i] & 15];
  }
  return s;
}

}  // namespace oracle
