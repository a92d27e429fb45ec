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

#include "gaen/crypto.hpp"

#include <openssl/core_names.h>
#include <openssl/evp.h>
#include <openssl/kdf.h>
#include <openssl/params.h>

#include <cmath>
#include <memory>
#include <string>

namespace gaen::crypto {
namespace {

struct CipherCtxDeleter {
  void operator()(EVP_CIPHER_CTX* ctx) const { EVP_CIPHER_CTX_free(ctx); }
};
using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, CipherCtxDeleter>;

struct KdfDeleter {
  void operator()(EVP_KDF* kdf) const { EVP_KDF_free(kdf); }
};
struct KdfCtxDeleter {
  void operator()(EVP_KDF_CTX* ctx) const { EVP_KDF_CTX_free(ctx); }
};

[[noreturn]] void openssl_failure(const char* what) {
  throw std::runtime_error(std::string("OpenSSL failure: ") + what);
}

Block16 hkdf_sha256_16(const Block16& ikm, const char* info) {
  std::unique_ptr<EVP_KDF, KdfDeleter> kdf(
      EVP_KDF_fetch(nullptr, OSSL_KDF_NAME_HKDF, nullptr));
  if (!kdf) openssl_failure("EVP_KDF_fetch(HKDF)");
  std::unique_ptr<EVP_KDF_CTX, KdfCtxDeleter> ctx(EVP_KDF_CTX_new(kdf.get()));
  if (!ctx) openssl_failure("EVP_KDF_CTX_new");

  char digest[] = "SHA256";
  OSSL_PARAM params[] = {
      OSSL_PARAM_construct_utf8_string(OSSL_KDF_PARAM_DIGEST, digest, 0),
      OSSL_PARAM_construct_octet_string(
          OSSL_KDF_PARAM_KEY, const_cast<std::uint8_t*>(ikm.data()),
          ikm.size()),
      OSSL_PARAM_construct_octet_string(
          OSSL_KDF_PARAM_INFO, const_cast<char*>(info),
          std::char_traits<char>::length(info)),
      OSSL_PARAM_construct_end(),
  };
  Block16 out{};
  if (EVP_KDF_derive(ctx.get(), out.data(), out.size(), params) != 1) {
    openssl_failure("EVP_KDF_derive");
  }
  return out;
}

CipherCtx make_ecb(const Block16& key) {
  CipherCtx ctx(EVP_CIPHER_CTX_new());
  if (!ctx) openssl_failure("EVP_CIPHER_CTX_new");
  if (EVP_EncryptInit_ex(ctx.get(), EVP_aes_128_ecb(), nullptr, key.data(),
                         nullptr) != 1) {
    openssl_failure("EVP_EncryptInit_ex(aes-128-ecb)");
  }
  EVP_CIPHER_CTX_set_padding(ctx.get(), 0);
  return ctx;
}

Block16 ecb_block(EVP_CIPHER_CTX* ctx, const Block16& in) {
  Block16 out{};
  int len = 0;
  if (EVP_EncryptUpdate(ctx, out.data(), &len, in.data(),
                        static_cast<int>(in.size())) != 1 ||
      len != 16) {
    openssl_failure("EVP_EncryptUpdate(aes-128-ecb)");
  }
  return out;
}

// CTR is its own inverse; encryption and decryption share this routine.
std::array<std::uint8_t, 4> ctr_apply(const AemKey& aemk, const Block16& iv,
                                      const std::array<std::uint8_t, 4>& in) {
  CipherCtx ctx(EVP_CIPHER_CTX_new());
  if (!ctx) openssl_failure("EVP_CIPHER_CTX_new");
  if (EVP_EncryptInit_ex(ctx.get(), EVP_aes_128_ctr(), nullptr,
                         aemk.bytes.data(), iv.data()) != 1) {
    openssl_failure("EVP_EncryptInit_ex(aes-128-ctr)");
  }
  std::array<std::uint8_t, 4> out{};
  int len = 0;
  if (EVP_EncryptUpdate(ctx.get(), out.data(), &len, in.data(),
                        static_cast<int>(in.size())) != 1 ||
      len != 4) {
    openssl_failure("EVP_EncryptUpdate(aes-128-ctr)");
  }
  return out;
}

}  // namespace

IntervalNumber interval_number(double unix_seconds) {
  if (!(unix_seconds >= 0.0)) {
    throw DomainError("interval_number: negative or NaN time");
  }
  return static_cast<IntervalNumber>(std::floor(unix_seconds / kIntervalSeconds));
}

TemporaryExposureKey TemporaryExposureKey::make(const Block16& key,
                                                IntervalNumber rolling_start) {
  if (rolling_start % kRollingPeriod != 0) {
    throw AlignmentError("rolling_start " + std::to_string(rolling_start) +
                         " is not a multiple of 144");
  }
  return TemporaryExposureKey{key, rolling_start};
}

Metadata Metadata::with_tx_power(int dbm) {
  if (dbm < -127 || dbm > 127) {
    throw DomainError("tx_power " + std::to_string(dbm) +
                      " dBm outside [-127, 127]");
  }
  Metadata m;
  m.tx_power = static_cast<std::int8_t>(dbm);
  return m;
}

std::array<std::uint8_t, 4> Metadata::to_bytes() const {
  return {version, static_cast<std::uint8_t>(tx_power), reserved[0],
          reserved[1]};
}

Metadata Metadata::from_bytes(const std::array<std::uint8_t, 4>& b) {
  Metadata m;
  m.version = b[0];
  m.tx_power = static_cast<std::int8_t>(b[1]);
  m.reserved = {b[2], b[3]};
  return m;
}

TemporaryExposureKey new_tek(Rng& rng, IntervalNumber day_start) {
  if (day_start % kRollingPeriod != 0) {
    throw AlignmentError("day_start " + std::to_string(day_start) +
                         " is not a multiple of 144");
  }
  Block16 key{};
  rng.fill(key);
  return TemporaryExposureKey{key, day_start};
}

RpiKey derive_rpik(const TemporaryExposureKey& tek) {
  return RpiKey{hkdf_sha256_16(tek.key, "EN-RPIK")};
}

AemKey derive_aemk(const TemporaryExposureKey& tek) {
  return AemKey{hkdf_sha256_16(tek.key, "EN-AEMK")};
}

Block16 padded_rpi_block(IntervalNumber interval) {
  Block16 block{'E', 'N', '-', 'R', 'P', 'I'};
  block[12] = static_cast<std::uint8_t>(interval & 0xff);
  block[13] = static_cast<std::uint8_t>((interval >> 8) & 0xff);
  block[14] = static_cast<std::uint8_t>((interval >> 16) & 0xff);
  block[15] = static_cast<std::uint8_t>((interval >> 24) & 0xff);
  return block;
}

RollingProximityIdentifier generate_rpi(const RpiKey& rpik,
                                        IntervalNumber interval) {
  CipherCtx ctx = make_ecb(rpik.bytes);
  return {ecb_block(ctx.get(), padded_rpi_block(interval)), interval};
}

std::vector<RollingProximityIdentifier> regenerate_day(
    const TemporaryExposureKey& tek) {
  const RpiKey rpik = derive_rpik(tek);
  CipherCtx ctx = make_ecb(rpik.bytes);
  std::vector<RollingProximityIdentifier> out;
  out.reserve(kRollingPeriod);
  for (IntervalNumber i = tek.rolling_start;
       i < tek.rolling_start + kRollingPeriod; ++i) {
    out.push_back({ecb_block(ctx.get(), padded_rpi_block(i)), i});
  }
  return out;
}

AssociatedEncryptedMetadata encrypt_aem(const AemKey& aemk, const Block16& rpi,
                                        const Metadata& meta) {
  return {ctr_apply(aemk, rpi, meta.to_bytes())};
}

Metadata decrypt_aem(const AemKey& aemk, const Block16& rpi,
                     const AssociatedEncryptedMetadata& aem) {
  return Metadata::from_bytes(ctr_apply(aemk, rpi, aem.ciphertext));
}

}  // namespace gaen::crypto
