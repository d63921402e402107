// Copyright 2026 The wavimg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Sidecar file describing how to turn a decoded image back into audio.
//
//   WIF1
//   rows=1000
//   cols=2000
//   bits=16
//   mode=positive
//   sample_rate=42100
//   meaningful_count=2000000
//   source_total_samples=4725975
//
// ASCII, "\n" line endings, keys in exactly this order.

#ifndef WAVIMG_MANIFEST_H_
#define WAVIMG_MANIFEST_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wavimg/signal_prep.h"

namespace wavimg {

inline constexpr std::string_view kManifestMagic = "WIF1";

struct Manifest {
  std::uint64_t rows = 1;
  std::uint64_t cols = 1;
  int bits = 16;
  PrepMode mode = PrepMode::kPositiveOnly;
  std::uint64_t sample_rate = 44100;
  std::uint64_t meaningful_count = 0;
  std::uint64_t source_total_samples = 0;

  bool operator==(const Manifest&) const = default;

  /// Throws Error(kMalformedManifest) if a field invariant is broken.
  void validate() const;
};

std::string write_manifest(const Manifest& manifest);

/// Strict reader: magic line first, every key exactly once and in order,
/// unsigned decimal values, no unknown keys. Throws Error(kMalformedManifest).
Manifest read_manifest(std::string_view text);
Manifest read_manifest(std::span<const std::uint8_t> bytes);

}  // namespace wavimg

#endif  // WAVIMG_MANIFEST_H_
