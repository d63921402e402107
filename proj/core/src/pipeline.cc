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

#include "wavimg/pipeline.h"

#include <string>

#include "wavimg/error.h"

namespace wavimg {

EncodedImage encode_signal(const AudioSignal& signal, const EncodeOptions& options) {
  options.codec.validate();
  if (options.take && *options.take == 0) {
    throw Error(ErrorCode::kInvalidArgument, "take count must be at least 1");
  }
  EncodedImage out;
  out.prepared = take_first(apply_mode(signal, options.mode), options.take);
  out.shape = options.shape ? *options.shape : default_shape(out.prepared.size(), options.cols_hint);

  const SampleGrid grid = reshape_to_grid(out.prepared, out.shape, /*pad=*/true);
  const QuantizedGrid pixels = quantize(grid, options.codec.bits);
  out.image = encode_image(pixels, options.codec);

  out.manifest.rows = out.shape.rows;
  out.manifest.cols = out.shape.cols;
  out.manifest.bits = options.codec.bits;
  out.manifest.mode = options.mode;
  out.manifest.sample_rate = signal.sample_rate;
  out.manifest.meaningful_count = out.prepared.size();
  out.manifest.source_total_samples = signal.samples.size();
  out.manifest.validate();
  return out;
}

std::vector<double> decode_prepared(std::span<const std::uint8_t> image, ImageFormat format,
                                    const Manifest& manifest) {
  manifest.validate();
  const QuantizedGrid pixels = decode_image(image, format);
  if (pixels.rows() != manifest.rows || pixels.cols() != manifest.cols) {
    throw Error(ErrorCode::kGeometryMismatch,
                "image is " + std::to_string(pixels.rows()) + "x" + std::to_string(pixels.cols()) +
                    " but the manifest says " + std::to_string(manifest.rows) + "x" +
                    std::to_string(manifest.cols));
  }
  if (pixels.bits() != manifest.bits) {
    throw Error(ErrorCode::kGeometryMismatch, "image is " + std::to_string(pixels.bits()) +
                                                  "-bit but the manifest says " +
                                                  std::to_string(manifest.bits));
  }
  const SampleGrid values = dequantize(pixels);
  const SampleGrid trimmed(values.shape(), {values.values().begin(), values.values().end()},
                           manifest.meaningful_count);
  return flatten_grid(trimmed);
}

AudioSignal decode_signal(std::span<const std::uint8_t> image, ImageFormat format,
                          const Manifest& manifest) {
  AudioSignal out;
  out.samples = invert_mode(decode_prepared(image, format, manifest), manifest.mode);
  out.sample_rate = static_cast<std::uint32_t>(manifest.sample_rate);
  out.source_bits = 16;
  out.channels_in_source = 1;
  return out;
}

AudioSignal reference_signal(const EncodedImage& encoded) {
  AudioSignal out;
  out.samples = invert_mode(encoded.prepared, encoded.manifest.mode);
  out.sample_rate = static_cast<std::uint32_t>(encoded.manifest.sample_rate);
  return out;
}

}  // namespace wavimg
