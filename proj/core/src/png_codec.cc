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

// Grayscale PNG through libpng. libpng reports errors by longjmp, so every
// setjmp lives in a small *_guarded function whose own locals are trivial;
// anything that must survive the jump is kept in a context struct owned by
// the caller.

#include <png.h>

#include <csetjmp>
#include <cstring>
#include <string>

#include "codec_common.h"
#include "wavimg/error.h"
#include "wavimg/raster_codec.h"

namespace wavimg {
namespace {

struct PngIo {
  std::span<const std::uint8_t> input;
  std::size_t read_pos = 0;
  std::vector<std::uint8_t> output;
  std::vector<std::uint8_t> pixels;  // raw rows, big-endian for 16-bit
  std::vector<png_bytep> row_pointers;
  std::string message;
};

enum class ReadStatus { kOk, kLibraryError, kColour, kDepth, kTooLarge };

struct ReadResult {
  ReadStatus status = ReadStatus::kOk;
  png_uint_32 width = 0;
  png_uint_32 height = 0;
  int depth = 0;
  int colour = 0;
};

void on_error(png_structp png, png_const_charp message) {
  static_cast<PngIo*>(png_get_error_ptr(png))->message = message;
  png_longjmp(png, 1);
}

void on_warning(png_structp, png_const_charp) {}

void on_write(png_structp png, png_bytep data, png_size_t length) {
  auto* io = static_cast<PngIo*>(png_get_io_ptr(png));
  io->output.insert(io->output.end(), data, data + length);
}

void on_flush(png_structp) {}

void on_read(png_structp png, png_bytep data, png_size_t length) {
  auto* io = static_cast<PngIo*>(png_get_io_ptr(png));
  if (length > io->input.size() - io->read_pos) png_error(png, "unexpected end of PNG data");
  std::memcpy(data, io->input.data() + io->read_pos, length);
  io->read_pos += length;
}

class WriteHandle {
 public:
  explicit WriteHandle(PngIo& io)
      : png_(png_create_write_struct(PNG_LIBPNG_VER_STRING, &io, on_error, on_warning)),
        info_(png_ ? png_create_info_struct(png_) : nullptr) {
    if (!png_ || !info_) throw Error(ErrorCode::kIo, "libpng could not allocate a writer");
  }
  ~WriteHandle() { png_destroy_write_struct(&png_, &info_); }
  WriteHandle(const WriteHandle&) = delete;
  WriteHandle& operator=(const WriteHandle&) = delete;

  png_structp png() const { return png_; }
  png_infop info() const { return info_; }

 private:
  png_structp png_;
  png_infop info_;
};

class ReadHandle {
 public:
  explicit ReadHandle(PngIo& io)
      : png_(png_create_read_struct(PNG_LIBPNG_VER_STRING, &io, on_error, on_warning)),
        info_(png_ ? png_create_info_struct(png_) : nullptr) {
    if (!png_ || !info_) throw Error(ErrorCode::kIo, "libpng could not allocate a reader");
  }
  ~ReadHandle() { png_destroy_read_struct(&png_, &info_, nullptr); }
  ReadHandle(const ReadHandle&) = delete;
  ReadHandle& operator=(const ReadHandle&) = delete;

  png_structp png() const { return png_; }
  png_infop info() const { return info_; }

 private:
  png_structp png_;
  png_infop info_;
};

bool write_guarded(png_structp png, png_infop info, PngIo& io, png_uint_32 width,
                   png_uint_32 height, int depth) {
  if (setjmp(png_jmpbuf(png))) return false;
  png_set_write_fn(png, &io, on_write, on_flush);
  png_set_IHDR(png, info, width, height, depth, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, io.row_pointers.data());
  png_write_end(png, nullptr);
  return true;
}

bool read_guarded(png_structp png, png_infop info, PngIo& io, ReadResult& result) {
  if (setjmp(png_jmpbuf(png))) {
    result.status = ReadStatus::kLibraryError;
    return false;
  }
  png_set_read_fn(png, &io, on_read);
  png_read_info(png, info);
  int interlace = 0;
  png_get_IHDR(png, info, &result.width, &result.height, &result.depth, &result.colour,
               &interlace, nullptr, nullptr);
  if (result.colour != PNG_COLOR_TYPE_GRAY) {
    result.status = ReadStatus::kColour;
    return false;
  }
  if (result.depth != 8 && result.depth != 16) {
    result.status = ReadStatus::kDepth;
    return false;
  }
  if (result.width > detail::kMaxDecodedPixels ||
      result.height > detail::kMaxDecodedPixels / result.width) {
    result.status = ReadStatus::kTooLarge;
    return false;
  }
  png_set_interlace_handling(png);
  png_read_update_info(png, info);
  const std::size_t row_bytes = png_get_rowbytes(png, info);
  io.pixels.resize(row_bytes * result.height);
  io.row_pointers.resize(result.height);
  for (png_uint_32 r = 0; r < result.height; ++r) {
    io.row_pointers[r] = io.pixels.data() + r * row_bytes;
  }
  png_read_image(png, io.row_pointers.data());
  png_read_end(png, nullptr);
  return true;
}

}  // namespace

std::vector<std::uint8_t> encode_png(const QuantizedGrid& grid) {
  if (grid.rows() > PNG_UINT_31_MAX || grid.cols() > PNG_UINT_31_MAX) {
    throw Error(ErrorCode::kInvalidArgument, "image too large for PNG");
  }
  PngIo io;
  const std::size_t bytes_per_sample = grid.bits() / 8;
  const std::size_t row_bytes = grid.cols() * bytes_per_sample;
  io.pixels.resize(row_bytes * grid.rows());
  const auto pixels = grid.pixels();
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    if (bytes_per_sample == 2) {
      io.pixels[2 * i] = static_cast<std::uint8_t>(pixels[i] >> 8);
      io.pixels[2 * i + 1] = static_cast<std::uint8_t>(pixels[i] & 0xff);
    } else {
      io.pixels[i] = static_cast<std::uint8_t>(pixels[i]);
    }
  }
  io.row_pointers.resize(grid.rows());
  for (std::size_t r = 0; r < grid.rows(); ++r) {
    io.row_pointers[r] = io.pixels.data() + r * row_bytes;
  }

  WriteHandle handle(io);
  if (!write_guarded(handle.png(), handle.info(), io, static_cast<png_uint_32>(grid.cols()),
                     static_cast<png_uint_32>(grid.rows()), grid.bits())) {
    throw Error(ErrorCode::kInvalidArgument, "PNG encoder failed: " + io.message);
  }
  return std::move(io.output);
}

QuantizedGrid decode_png(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 8 || png_sig_cmp(bytes.data(), 0, 8) != 0) {
    throw Error(ErrorCode::kMalformedImage, "missing PNG signature");
  }
  PngIo io;
  io.input = bytes;
  ReadResult result;
  {
    ReadHandle handle(io);
    read_guarded(handle.png(), handle.info(), io, result);
  }
  switch (result.status) {
    case ReadStatus::kOk:
      break;
    case ReadStatus::kLibraryError:
      throw Error(ErrorCode::kMalformedImage, "PNG decoder: " + io.message);
    case ReadStatus::kColour:
      throw Error(ErrorCode::kUnsupportedImage,
                  "PNG colour type " + std::to_string(result.colour) + " is not single-channel grayscale");
    case ReadStatus::kDepth:
      throw Error(ErrorCode::kUnsupportedImage,
                  "PNG bit depth " + std::to_string(result.depth) + " is not 8 or 16");
    case ReadStatus::kTooLarge:
      detail::check_decoded_dimensions(result.width, result.height, "PNG");
      break;
  }

  const std::size_t count = static_cast<std::size_t>(result.width) * result.height;
  std::vector<std::uint16_t> pixels(count);
  for (std::size_t i = 0; i < count; ++i) {
    pixels[i] = result.depth == 16
                    ? static_cast<std::uint16_t>((io.pixels[2 * i] << 8) | io.pixels[2 * i + 1])
                    : io.pixels[i];
  }
  return QuantizedGrid({result.height, result.width}, result.depth, std::move(pixels));
}

}  // namespace wavimg
