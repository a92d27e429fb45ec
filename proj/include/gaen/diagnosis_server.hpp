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

#include <shared_mutex>
#include <span>
#include <vector>

#include "gaen/crypto.hpp"

namespace gaen::server {

struct PublishedTek {
  crypto::TemporaryExposureKey tek;
  double publication_time = 0.0;
  bool operator==(const PublishedTek&) const = default;
};

struct PublishedTekSet {
  std::vector<PublishedTek> entries;

  std::vector<crypto::TemporaryExposureKey> keys() const;
  bool operator==(const PublishedTekSet&) const = default;
};

/// Append-only registry of diagnosis keys. Everybody reads it: honest
/// devices and the attacker see the same entries.
///
/// Reads may run concurrently; publishes take the writer lock.
class DiagnosisServer {
 public:
  void publish(std::span<const crypto::TemporaryExposureKey> teks, double t);

  /// Entries with publication_time <= t, in publication order.
  PublishedTekSet snapshot(double t) const;

  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::vector<PublishedTek> entries_;
};

}  // namespace gaen::server
