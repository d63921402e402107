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

// RIFF/WAVE reading and writing for integer LPCM (8-bit unsigned and 16-bit
// signed little-endian). Samples are held as doubles in [-1, 1), scaled by
// 1/32768 (16-bit) or 1/128 around the 128 midpoint (8-bit).

#ifndef WAVIMG_WAV_IO_H_
#define WAVIMG_WAV_IO_H_

#include <cstdint>
#include <span>
#include <vector>

namespace wavimg {

/// One channel of normalized audio plus the format it was read from.
struct AudioSignal {
  std::vector<double> samples;
  std::uint32_t sample_rate = 44100;
  int source_bits = 16;
  int channels_in_source = 1;

  bool operator==(const AudioSignal&) const = default;
};

struct WavFormat {
  std::uint16_t audio_format_code = 1;
  std::uint16_t channels = 1;
  std::uint32_t sample_rate = 44100;
  std::uint16_t bits_per_sample = 16;
};

/// Size of the header emitted by write_wav ("RIFF" + "fmt " + "data" headers).
inline constexpr std::size_t kCanonicalWavHeaderBytes = 44;

/// Parses a complete RIFF/WAVE file image. Only channel 0 of multi-channel
/// files is kept; chunks other than "fmt " and "data" are skipped.
///
/// Throws Error(kMalformedRiff) for structural damage and
/// Error(kUnsupportedFormat) for non-PCM or non 8/16-bit payloads.
AudioSignal parse_wav(std::span<const std::uint8_t> bytes);

/// Reads just the format chunk. Same error contract as parse_wav.
WavFormat parse_wav_format(std::span<const std::uint8_t> bytes);

/// Serializes `signal` as a canonical mono PCM file at `target_bits` (8 or
/// 16). Samples are scaled, rounded half away from zero and clamped.
std::vector<std::uint8_t> write_wav(const AudioSignal& signal, int target_bits);

}  // namespace wavimg

#endif  // WAVIMG_WAV_IO_H_
