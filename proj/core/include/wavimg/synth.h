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

// Seeded test-signal generator. Output depends only on the options (the
// random stream is mt19937_64 mapped to doubles by hand, not through a
// library distribution), so files are reproducible across toolchains.

#ifndef WAVIMG_SYNTH_H_
#define WAVIMG_SYNTH_H_

#include <cstdint>
#include <string_view>

#include "wavimg/wav_io.h"

namespace wavimg {

enum class SynthKind {
  /// Gated, exponentially decaying white-noise hits separated by silence.
  kNoiseBursts,
  /// kSineAmplitude * sin(2 pi f k / rate).
  kSine,
  /// A quieter sine under quieter noise bursts.
  kMixed,
};

std::string_view to_string(SynthKind kind);
/// Accepts "noise-bursts", "sine", "mixed".
SynthKind parse_synth_kind(std::string_view text);

inline constexpr double kSineAmplitude = 0.9;

struct SynthOptions {
  SynthKind kind = SynthKind::kNoiseBursts;
  std::size_t sample_count = 0;
  std::uint32_t sample_rate = 44100;
  std::uint64_t seed = 1;
  double frequency_hz = 440.0;
};

/// Mono signal with every sample in [-1, 1). Throws Error(kInvalidArgument)
/// for a zero sample rate or a non-positive frequency.
AudioSignal synthesize(const SynthOptions& options);

/// round(seconds * rate). Throws Error(kInvalidArgument) unless seconds > 0.
std::size_t samples_for_duration(double seconds, std::uint32_t sample_rate);

}  // namespace wavimg

#endif  // WAVIMG_SYNTH_H_
