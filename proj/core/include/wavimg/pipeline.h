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

// End-to-end audio -> image -> audio, in memory.
//
// encode: apply mode, truncate, reshape (padded), quantize, containerize.
// decode: read container, dequantize, flatten to meaningful_count, and
//         (for audio output) undo the mode mapping.

#ifndef WAVIMG_PIPELINE_H_
#define WAVIMG_PIPELINE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wavimg/manifest.h"
#include "wavimg/raster_codec.h"
#include "wavimg/signal_prep.h"
#include "wavimg/wav_io.h"

namespace wavimg {

inline constexpr std::size_t kDefaultColumns = 2000;

struct EncodeOptions {
  PrepMode mode = PrepMode::kPositiveOnly;
  CodecSpec codec;
  std::size_t cols_hint = kDefaultColumns;
  /// Keep at most this many prepared values.
  std::optional<std::size_t> take;
  /// Overrides default_shape(); must hold every prepared value.
  std::optional<GridShape> shape;
};

struct EncodedImage {
  /// The stream that was laid into the grid, in [0, 1].
  std::vector<double> prepared;
  GridShape shape;
  Manifest manifest;
  std::vector<std::uint8_t> image;
};

EncodedImage encode_signal(const AudioSignal& signal, const EncodeOptions& options);

/// The decoded prepared-domain stream (length manifest.meaningful_count).
/// Throws Error(kGeometryMismatch) when the container disagrees with the
/// manifest on rows, cols or bit depth.
std::vector<double> decode_prepared(std::span<const std::uint8_t> image, ImageFormat format,
                                    const Manifest& manifest);

/// decode_prepared followed by the inverse mode mapping, at the manifest's
/// sample rate.
AudioSignal decode_signal(std::span<const std::uint8_t> image, ImageFormat format,
                          const Manifest& manifest);

/// The audio the decoder should reproduce: the prepared stream mapped back
/// through the mode (for positive mode this is the filtered, truncated
/// signal itself).
AudioSignal reference_signal(const EncodedImage& encoded);

}  // namespace wavimg

#endif  // WAVIMG_PIPELINE_H_
