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

// Quantization of unit-interval grids to integer pixels, and the three
// grayscale containers they travel in:
//
//   PNG   8 or 16 bit, lossless (libpng)
//   TIFF  8 or 16 bit, baseline, uncompressed, single strip, little-endian
//   JPEG  8 bit, baseline JFIF (libjpeg)

#ifndef WAVIMG_RASTER_CODEC_H_
#define WAVIMG_RASTER_CODEC_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "wavimg/signal_prep.h"

namespace wavimg {

/// Row-major integer pixels at 8 or 16 bits per sample.
class QuantizedGrid {
 public:
  /// Throws Error(kUnsupportedDepth) for depths other than 8/16,
  /// Error(kShapeMismatch) for size disagreement and Error(kValueOutOfRange)
  /// for pixels above 2^bits - 1.
  QuantizedGrid(GridShape shape, int bits, std::vector<std::uint16_t> pixels);

  std::size_t rows() const { return shape_.rows; }
  std::size_t cols() const { return shape_.cols; }
  GridShape shape() const { return shape_; }
  int bits() const { return bits_; }
  std::uint32_t max_code() const { return (1u << bits_) - 1; }
  std::span<const std::uint16_t> pixels() const { return pixels_; }

  bool operator==(const QuantizedGrid&) const = default;

 private:
  GridShape shape_;
  int bits_;
  std::vector<std::uint16_t> pixels_;
};

/// pixel = round_half_away(value * (2^bits - 1)).
QuantizedGrid quantize(const SampleGrid& grid, int bits);

/// value = pixel / (2^bits - 1). The result's meaningful_count covers the
/// whole grid; the real count lives in the manifest.
SampleGrid dequantize(const QuantizedGrid& grid);

enum class ImageFormat { kPng, kTiff, kJpeg };

std::string_view to_string(ImageFormat format);
/// Accepts png, tif, tiff, jpg, jpeg (case-insensitive).
ImageFormat parse_image_format(std::string_view text);
/// Lowercase filename extension without the dot: png, tif, jpg.
std::string_view file_extension(ImageFormat format);

inline constexpr int kDefaultJpegQuality = 75;

struct CodecSpec {
  ImageFormat format = ImageFormat::kPng;
  int bits = 16;
  int jpeg_quality = kDefaultJpegQuality;

  /// Throws Error(kUnsupportedDepth) for JPEG above 8 bits or a depth other
  /// than 8/16, Error(kInvalidArgument) for a quality outside [1, 100].
  void validate() const;
};

/// 16 for the lossless containers, 8 for JPEG.
int default_bits(ImageFormat format);

std::vector<std::uint8_t> encode_image(const QuantizedGrid& grid, const CodecSpec& spec);

/// Throws Error(kMalformedImage) when the bytes are not a readable
/// `expected_format` container and Error(kUnsupportedImage) for colour,
/// alpha, palette or sub-byte / over-16-bit depths.
QuantizedGrid decode_image(std::span<const std::uint8_t> bytes, ImageFormat expected_format);

// Per-container entry points; encode_image/decode_image dispatch to these.
std::vector<std::uint8_t> encode_png(const QuantizedGrid& grid);
QuantizedGrid decode_png(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_tiff(const QuantizedGrid& grid);
QuantizedGrid decode_tiff(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_jpeg(const QuantizedGrid& grid, int quality);
QuantizedGrid decode_jpeg(std::span<const std::uint8_t> bytes);

}  // namespace wavimg

#endif  // WAVIMG_RASTER_CODEC_H_
