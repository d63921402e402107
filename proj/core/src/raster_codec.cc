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

#include "wavimg/raster_codec.h"

#include <algorithm>
#include <cctype>
#include <string>

#include "byte_io.h"
#include "wavimg/error.h"

namespace wavimg {
namespace {

void check_depth(int bits) {
  if (bits != 8 && bits != 16) {
    throw Error(ErrorCode::kUnsupportedDepth,
                std::to_string(bits) + "-bit pixels (only 8 and 16 are supported)");
  }
}

}  // namespace

QuantizedGrid::QuantizedGrid(GridShape shape, int bits, std::vector<std::uint16_t> pixels)
    : shape_(shape), bits_(bits), pixels_(std::move(pixels)) {
  check_depth(bits_);
  if (shape_.rows == 0 || shape_.cols == 0 || pixels_.size() / shape_.cols != shape_.rows ||
      pixels_.size() % shape_.cols != 0) {
    throw Error(ErrorCode::kShapeMismatch,
                std::to_string(pixels_.size()) + " pixels do not fill a " +
                    std::to_string(shape_.rows) + "x" + std::to_string(shape_.cols) + " image");
  }
  if (bits_ == 8) {
    const auto it = std::find_if(pixels_.begin(), pixels_.end(), [](auto p) { return p > 255; });
    if (it != pixels_.end()) {
      throw Error(ErrorCode::kValueOutOfRange,
                  "pixel " + std::to_string(*it) + " does not fit in 8 bits");
    }
  }
}

QuantizedGrid quantize(const SampleGrid& grid, int bits) {
  check_depth(bits);
  const double scale = static_cast<double>((1u << bits) - 1);
  const auto values = grid.values();
  std::vector<std::uint16_t> pixels(values.size());
  std::transform(values.begin(), values.end(), pixels.begin(), [scale](double v) {
    return static_cast<std::uint16_t>(detail::round_half_away(v * scale));
  });
  return QuantizedGrid(grid.shape(), bits, std::move(pixels));
}

SampleGrid dequantize(const QuantizedGrid& grid) {
  const double scale = static_cast<double>(grid.max_code());
  const auto pixels = grid.pixels();
  std::vector<double> values(pixels.size());
  std::transform(pixels.begin(), pixels.end(), values.begin(),
                 [scale](std::uint16_t p) { return std::clamp(p / scale, 0.0, 1.0); });
  return SampleGrid(grid.shape(), std::move(values), pixels.size());
}

std::string_view to_string(ImageFormat format) {
  switch (format) {
    case ImageFormat::kPng:
      return "PNG";
    case ImageFormat::kTiff:
      return "TIFF";
    case ImageFormat::kJpeg:
      return "JPEG";
  }
  return "?";
}

std::string_view file_extension(ImageFormat format) {
  switch (format) {
    case ImageFormat::kPng:
      return "png";
    case ImageFormat::kTiff:
      return "tif";
    case ImageFormat::kJpeg:
      return "jpg";
  }
  return "";
}

ImageFormat parse_image_format(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "png") return ImageFormat::kPng;
  if (lower == "tif" || lower == "tiff") return ImageFormat::kTiff;
  if (lower == "jpg" || lower == "jpeg") return ImageFormat::kJpeg;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown image format '" + std::string(text) + "' (expected png, tif or jpg)");
}

int default_bits(ImageFormat format) { return format == ImageFormat::kJpeg ? 8 : 16; }

void CodecSpec::validate() const {
  check_depth(bits);
  if (format == ImageFormat::kJpeg) {
    if (bits != 8) {
      throw Error(ErrorCode::kUnsupportedDepth, "baseline JPEG only carries 8-bit samples");
    }
    if (jpeg_quality < 1 || jpeg_quality > 100) {
      throw Error(ErrorCode::kInvalidArgument,
                  "JPEG quality " + std::to_string(jpeg_quality) + " is outside [1, 100]");
    }
  }
}

std::vector<std::uint8_t> encode_image(const QuantizedGrid& grid, const CodecSpec& spec) {
  spec.validate();
  if (grid.bits() != spec.bits) {
    throw Error(ErrorCode::kUnsupportedDepth, "grid is " + std::to_string(grid.bits()) +
                                                  "-bit but the codec expects " +
                                                  std::to_string(spec.bits));
  }
  switch (spec.format) {
    case ImageFormat::kPng:
      return encode_png(grid);
    case ImageFormat::kTiff:
      return encode_tiff(grid);
    case ImageFormat::kJpeg:
      return encode_jpeg(grid, spec.jpeg_quality);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown image format");
}

QuantizedGrid decode_image(std::span<const std::uint8_t> bytes, ImageFormat expected_format) {
  switch (expected_format) {
    case ImageFormat::kPng:
      return decode_png(bytes);
    case ImageFormat::kTiff:
      return decode_tiff(bytes);
    case ImageFormat::kJpeg:
      return decode_jpeg(bytes);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown image format");
}

}  // namespace wavimg
