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

#include "gaen/diagnosis_server.hpp"

#include <mutex>

namespace gaen::server {

std::vector<crypto::TemporaryExposureKey> PublishedTekSet::keys() const {
  std::vector<crypto::TemporaryExposureKey> out;
  out.reserve(entries.size());
  for (const PublishedTek& e : entries) out.push_back(e.tek);
  return out;
}

void DiagnosisServer::publish(
    std::span<const crypto::TemporaryExposureKey> teks, double t) {
  if (teks.empty()) return;
  std::unique_lock lock(mutex_);
  for (const auto& tek : teks) entries_.push_back({tek, t});
}

PublishedTekSet DiagnosisServer::snapshot(double t) const {
  std::shared_lock lock(mutex_);
  PublishedTekSet out;
  for (const PublishedTek& e : entries_) {
    if (e.publication_time <= t) out.entries.push_back(e);
  }
  return out;
}

std::size_t DiagnosisServer::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

}  // namespace gaen::server
