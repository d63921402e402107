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

// Baseline grayscale JFIF through libjpeg. Same longjmp discipline as the
// PNG codec: state that outlives a jump sits in a caller-owned struct.

#include <cstdio>  // jpeglib.h needs FILE

#include <jpeglib.h>

#include <csetjmp>
#include <cstdlib>
#include <string>

#include "codec_common.h"
#include "wavimg/error.h"
#include "wavimg/raster_codec.h"

namespace wavimg {
namespace {

struct JpegErrorManager {
  jpeg_error_mgr base;
  std::jmp_buf jump;
  char message[JMSG_LENGTH_MAX];
};

void on_error_exit(j_common_ptr cinfo) {
  auto* err = reinterpret_cast<JpegErrorManager*>(cinfo->err);
  (*cinfo->err->format_message)(cinfo, err->message);
  std::longjmp(err->jump, 1);
}

void on_output_message(j_common_ptr) {}

void install_errors(JpegErrorManager& err) {
  jpeg_std_error(&err.base);
  err.base.error_exit = on_error_exit;
  err.base.output_message = on_output_message;
  err.message[0] = '\0';
}

struct CompressState {
  jpeg_compress_struct cinfo{};
  JpegErrorManager err{};
  unsigned char* buffer = nullptr;
  unsigned long size = 0;
  std::vector<std::uint8_t> row;
};

bool compress_guarded(CompressState& s, const QuantizedGrid& grid, int quality) {
  if (setjmp(s.err.jump)) return false;
  jpeg_create_compress(&s.cinfo);
  jpeg_mem_dest(&s.cinfo, &s.buffer, &s.size);
  s.cinfo.image_width = static_cast<JDIMENSION>(grid.cols());
  s.cinfo.image_height = static_cast<JDIMENSION>(grid.rows());
  s.cinfo.input_components = 1;
  s.cinfo.in_color_space = JCS_GRAYSCALE;
  jpeg_set_defaults(&s.cinfo);
  s.cinfo.dct_method = JDCT_ISLOW;
  jpeg_set_quality(&s.cinfo, quality, TRUE);
  jpeg_start_compress(&s.cinfo, TRUE);
  const auto pixels = grid.pixels();
  while (s.cinfo.next_scanline < s.cinfo.image_height) {
    const std::size_t offset = static_cast<std::size_t>(s.cinfo.next_scanline) * grid.cols();
    for (std::size_t c = 0; c < grid.cols(); ++c) {
      s.row[c] = static_cast<std::uint8_t>(pixels[offset + c]);
    }
    JSAMPROW row_pointer = s.row.data();
    jpeg_write_scanlines(&s.cinfo, &row_pointer, 1);
  }
  jpeg_finish_compress(&s.cinfo);
  return true;
}

enum class DecompressStatus { kOk, kLibraryError, kComponents, kTooLarge };

struct DecompressState {
  jpeg_decompress_struct cinfo{};
  JpegErrorManager err{};
  std::vector<std::uint8_t> pixels;
  DecompressStatus status = DecompressStatus::kOk;
};

bool decompress_guarded(DecompressState& s, std::span<const std::uint8_t> bytes) {
  if (setjmp(s.err.jump)) {
    s.status = DecompressStatus::kLibraryError;
    return false;
  }
  jpeg_create_decompress(&s.cinfo);
  jpeg_mem_src(&s.cinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
  jpeg_read_header(&s.cinfo, TRUE);
  if (s.cinfo.num_components != 1 || s.cinfo.jpeg_color_space != JCS_GRAYSCALE) {
    s.status = DecompressStatus::kComponents;
    return false;
  }
  if (s.cinfo.image_width > detail::kMaxDecodedPixels ||
      s.cinfo.image_height > detail::kMaxDecodedPixels / s.cinfo.image_width) {
    s.status = DecompressStatus::kTooLarge;
    return false;
  }
  s.cinfo.out_color_space = JCS_GRAYSCALE;
  s.cinfo.dct_method = JDCT_ISLOW;
  jpeg_start_decompress(&s.cinfo);
  s.pixels.resize(static_cast<std::size_t>(s.cinfo.output_width) * s.cinfo.output_height);
  while (s.cinfo.output_scanline < s.cinfo.output_height) {
    JSAMPROW row_pointer =
        s.pixels.data() + static_cast<std::size_t>(s.cinfo.output_scanline) * s.cinfo.output_width;
    jpeg_read_scanlines(&s.cinfo, &row_pointer, 1);
  }
  jpeg_finish_decompress(&s.cinfo);
  return true;
}

}  // namespace

std::vector<std::uint8_t> encode_jpeg(const QuantizedGrid& grid, int quality) {
  if (grid.bits() != 8) {
    throw Error(ErrorCode::kUnsupportedDepth, "baseline JPEG only carries 8-bit samples");
  }
  if (quality < 1 || quality > 100) {
    throw Error(ErrorCode::kInvalidArgument,
                "JPEG quality " + std::to_string(quality) + " is outside [1, 100]");
  }
  if (grid.rows() > JPEG_MAX_DIMENSION || grid.cols() > JPEG_MAX_DIMENSION) {
    throw Error(ErrorCode::kInvalidArgument,
                "JPEG dimensions are limited to " + std::to_string(JPEG_MAX_DIMENSION) + " pixels");
  }
  CompressState state;
  state.row.resize(grid.cols());
  install_errors(state.err);
  state.cinfo.err = &state.err.base;
  const bool ok = compress_guarded(state, grid, quality);
  jpeg_destroy_compress(&state.cinfo);
  std::vector<std::uint8_t> out;
  if (ok) out.assign(state.buffer, state.buffer + state.size);
  std::free(state.buffer);
  if (!ok) throw Error(ErrorCode::kInvalidArgument, std::string("JPEG encoder failed: ") + state.err.message);
  return out;
}

QuantizedGrid decode_jpeg(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 3 || bytes[0] != 0xFF || bytes[1] != 0xD8 || bytes[2] != 0xFF) {
    throw Error(ErrorCode::kMalformedImage, "missing JPEG SOI marker");
  }
  DecompressState state;
  install_errors(state.err);
  state.cinfo.err = &state.err.base;
  decompress_guarded(state, bytes);
  const int components = state.cinfo.num_components;
  const JDIMENSION width = state.cinfo.image_width;
  const JDIMENSION height = state.cinfo.image_height;
  const long warnings = state.err.base.num_warnings;
  if (warnings > 0 && state.status == DecompressStatus::kOk) {
    (*state.err.base.format_message)(reinterpret_cast<j_common_ptr>(&state.cinfo), state.err.message);
  }
  jpeg_destroy_decompress(&state.cinfo);

  switch (state.status) {
    case DecompressStatus::kOk:
      break;
    case DecompressStatus::kLibraryError:
      throw Error(ErrorCode::kMalformedImage, std::string("JPEG decoder: ") + state.err.message);
    case DecompressStatus::kComponents:
      throw Error(ErrorCode::kUnsupportedImage,
                  "JPEG has " + std::to_string(components) + " components; only grayscale is supported");
    case DecompressStatus::kTooLarge:
      detail::check_decoded_dimensions(width, height, "JPEG");
      break;
  }
  // Corrupt-data conditions (truncation, bad Huffman codes) are warnings in
  // libjpeg; the decoder fills in gray and carries on.
  if (warnings > 0) {
    throw Error(ErrorCode::kMalformedImage, std::string("JPEG decoder: ") + state.err.message);
  }
  const GridShape shape{height, width};
  std::vector<std::uint16_t> pixels(state.pixels.begin(), state.pixels.end());
  return QuantizedGrid(shape, 8, std::move(pixels));
}

}  // namespace wavimg
