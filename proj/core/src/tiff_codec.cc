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

// Baseline grayscale TIFF, uncompressed.
//
// The writer always produces the same little-endian layout:
//
//   0    header   "II" 42 <ifd offset = 8>
//   8    IFD      12 entries, next-IFD offset 0
//   158  XResolution, YResolution (72/1 each)
//   174  pixel data, one strip, row-major
//
// The reader accepts either byte order and any number of strips, but only
// one sample per pixel, 8 or 16 bits, BlackIsZero, compression 1.

#include <algorithm>
#include <limits>
#include <optional>
#include <string>

#include "byte_io.h"
#include "codec_common.h"
#include "wavimg/error.h"
#include "wavimg/raster_codec.h"

namespace wavimg {
namespace {

enum Tag : std::uint16_t {
  kImageWidth = 256,
  kImageLength = 257,
  kBitsPerSample = 258,
  kCompression = 259,
  kPhotometric = 262,
  kStripOffsets = 273,
  kSamplesPerPixel = 277,
  kRowsPerStrip = 278,
  kStripByteCounts = 279,
  kXResolution = 282,
  kYResolution = 283,
  kResolutionUnit = 296,
  kSampleFormat = 339,
};

enum FieldType : std::uint16_t { kShort = 3, kLong = 4, kRational = 5 };

constexpr std::uint16_t kBlackIsZero = 1;
constexpr std::uint16_t kNoCompression = 1;
constexpr std::uint32_t kIfdOffset = 8;
constexpr std::uint16_t kEntryCount = 12;
constexpr std::uint32_t kRationalOffset = kIfdOffset + 2 + kEntryCount * 12 + 4;
constexpr std::uint32_t kPixelOffset = kRationalOffset + 16;

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedImage, "TIFF: " + what);
}

[[noreturn]] void unsupported(const std::string& what) {
  throw Error(ErrorCode::kUnsupportedImage, "TIFF: " + what);
}

void put_entry(std::vector<std::uint8_t>& out, std::uint16_t tag, std::uint16_t type,
               std::uint32_t value) {
  detail::put_le16(out, tag);
  detail::put_le16(out, type);
  detail::put_le32(out, 1);
  if (type == kShort) {
    // Left-justified in the 4-byte value field.
    detail::put_le16(out, static_cast<std::uint16_t>(value));
    detail::put_le16(out, 0);
  } else {
    detail::put_le32(out, value);
  }
}

std::size_t type_size(std::uint16_t type) {
  switch (type) {
    case 1: case 2: case 6: case 7:
      return 1;
    case 3: case 8:
      return 2;
    case 4: case 9: case 11:
      return 4;
    case 5: case 10: case 12:
      return 8;
    default:
      return 0;
  }
}

class TiffReader {
 public:
  explicit TiffReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {
    if (bytes_.size() < 8) malformed("file is shorter than the header");
    if (bytes_[0] == 'I' && bytes_[1] == 'I') {
      little_ = true;
    } else if (bytes_[0] == 'M' && bytes_[1] == 'M') {
      little_ = false;
    } else {
      malformed("missing byte-order mark");
    }
    const std::uint16_t magic = u16(2);
    if (magic == 43) unsupported("BigTIFF is not supported");
    if (magic != 42) malformed("bad magic number " + std::to_string(magic));
  }

  std::uint16_t u16(std::size_t at) const {
    return little_ ? detail::load_le16(bytes_, at) : detail::load_be16(bytes_, at);
  }
  std::uint32_t u32(std::size_t at) const {
    return little_ ? detail::load_le32(bytes_, at) : detail::load_be32(bytes_, at);
  }

  // Integer values of a SHORT or LONG field; empty for any other type.
  std::vector<std::uint32_t> values(std::size_t entry) const {
    const std::uint16_t type = u16(entry + 2);
    const std::uint32_t count = u32(entry + 4);
    if (type != kShort && type != kLong) return {};
    const std::uint64_t total = static_cast<std::uint64_t>(count) * type_size(type);
    std::size_t at = entry + 8;
    if (total > 4) {
      at = u32(entry + 8);
      if (at > bytes_.size() || total > bytes_.size() - at) {
        malformed("field data for tag " + std::to_string(u16(entry)) + " is out of bounds");
      }
    }
    std::vector<std::uint32_t> out(count);
    for (std::uint32_t i = 0; i < count; ++i) {
      out[i] = type == kShort ? u16(at + 2 * i) : u32(at + 4 * i);
    }
    return out;
  }

 private:
  std::span<const std::uint8_t> bytes_;
  bool little_ = true;
};

struct IfdFields {
  std::optional<std::uint32_t> width, height, photometric;
  std::uint32_t bits = 1, compression = kNoCompression, samples_per_pixel = 1, sample_format = 1;
  std::uint32_t rows_per_strip = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> strip_offsets, strip_byte_counts;
};

std::uint32_t single(const std::vector<std::uint32_t>& v, const char* name) {
  if (v.empty()) malformed(std::string(name) + " has no SHORT/LONG value");
  return v.front();
}

IfdFields read_ifd(const TiffReader& reader, std::span<const std::uint8_t> bytes) {
  const std::uint32_t ifd = reader.u32(4);
  if (ifd < 8 || ifd > bytes.size() || bytes.size() - ifd < 2) malformed("IFD offset out of bounds");
  const std::uint16_t count = reader.u16(ifd);
  if ((bytes.size() - ifd - 2) / 12 < count) malformed("IFD entries run past end of file");

  IfdFields f;
  for (std::uint16_t i = 0; i < count; ++i) {
    const std::size_t entry = ifd + 2 + 12u * i;
    switch (reader.u16(entry)) {
      case kImageWidth:
        f.width = single(reader.values(entry), "ImageWidth");
        break;
      case kImageLength:
        f.height = single(reader.values(entry), "ImageLength");
        break;
      case kBitsPerSample: {
        const auto v = reader.values(entry);
        f.bits = single(v, "BitsPerSample");
        for (const auto b : v) {
          if (b != f.bits) unsupported("mixed bits per sample");
        }
        break;
      }
      case kCompression:
        f.compression = single(reader.values(entry), "Compression");
        break;
      case kPhotometric:
        f.photometric = single(reader.values(entry), "PhotometricInterpretation");
        break;
      case kSamplesPerPixel:
        f.samples_per_pixel = single(reader.values(entry), "SamplesPerPixel");
        break;
      case kRowsPerStrip:
        f.rows_per_strip = single(reader.values(entry), "RowsPerStrip");
        break;
      case kStripOffsets:
        f.strip_offsets = reader.values(entry);
        break;
      case kStripByteCounts:
        f.strip_byte_counts = reader.values(entry);
        break;
      case kSampleFormat:
        f.sample_format = single(reader.values(entry), "SampleFormat");
        break;
      default:
        break;
    }
  }
  return f;
}

}  // namespace

std::vector<std::uint8_t> encode_tiff(const QuantizedGrid& grid) {
  const std::uint64_t bytes_per_sample = grid.bits() / 8;
  const std::uint64_t data_size = static_cast<std::uint64_t>(grid.rows()) * grid.cols() * bytes_per_sample;
  if (grid.rows() > std::numeric_limits<std::uint32_t>::max() ||
      grid.cols() > std::numeric_limits<std::uint32_t>::max() ||
      data_size > std::numeric_limits<std::uint32_t>::max() - kPixelOffset) {
    throw Error(ErrorCode::kInvalidArgument, "image too large for a classic TIFF file");
  }
  const auto rows = static_cast<std::uint32_t>(grid.rows());
  const auto cols = static_cast<std::uint32_t>(grid.cols());

  std::vector<std::uint8_t> out;
  out.reserve(kPixelOffset + data_size);
  out.push_back('I');
  out.push_back('I');
  detail::put_le16(out, 42);
  detail::put_le32(out, kIfdOffset);

  detail::put_le16(out, kEntryCount);
  put_entry(out, kImageWidth, kLong, cols);
  put_entry(out, kImageLength, kLong, rows);
  put_entry(out, kBitsPerSample, kShort, static_cast<std::uint32_t>(grid.bits()));
  put_entry(out, kCompression, kShort, kNoCompression);
  put_entry(out, kPhotometric, kShort, kBlackIsZero);
  put_entry(out, kStripOffsets, kLong, kPixelOffset);
  put_entry(out, kSamplesPerPixel, kShort, 1);
  put_entry(out, kRowsPerStrip, kLong, rows);
  put_entry(out, kStripByteCounts, kLong, static_cast<std::uint32_t>(data_size));
  put_entry(out, kXResolution, kRational, kRationalOffset);
  put_entry(out, kYResolution, kRational, kRationalOffset + 8);
  put_entry(out, kResolutionUnit, kShort, 2);  // inch
  detail::put_le32(out, 0);

  for (int i = 0; i < 2; ++i) {
    detail::put_le32(out, 72);
    detail::put_le32(out, 1);
  }
  for (const std::uint16_t p : grid.pixels()) {
    if (bytes_per_sample == 2) {
      detail::put_le16(out, p);
    } else {
      out.push_back(static_cast<std::uint8_t>(p));
    }
  }
  return out;
}

QuantizedGrid decode_tiff(std::span<const std::uint8_t> bytes) {
  const TiffReader reader(bytes);
  const IfdFields f = read_ifd(reader, bytes);

  if (!f.width || !f.height) malformed("missing image dimensions");
  if (f.samples_per_pixel != 1) {
    unsupported(std::to_string(f.samples_per_pixel) + " samples per pixel; only grayscale is supported");
  }
  if (f.bits != 8 && f.bits != 16) unsupported(std::to_string(f.bits) + "-bit samples");
  if (f.compression != kNoCompression) unsupported("compression scheme " + std::to_string(f.compression));
  if (f.sample_format != 1) unsupported("non-integer sample format");
  if (!f.photometric) malformed("missing PhotometricInterpretation");
  if (*f.photometric != kBlackIsZero) {
    unsupported("photometric interpretation " + std::to_string(*f.photometric));
  }
  detail::check_decoded_dimensions(*f.width, *f.height, "TIFF");

  const std::size_t width = *f.width;
  const std::size_t height = *f.height;
  const std::size_t bytes_per_sample = f.bits / 8;
  const std::size_t row_bytes = width * bytes_per_sample;
  if (height > bytes.size() / row_bytes) malformed("pixel data larger than the file");
  if (f.rows_per_strip == 0) malformed("RowsPerStrip is zero");
  const std::size_t rows_per_strip = std::min<std::size_t>(f.rows_per_strip, height);
  const std::size_t strips = (height + rows_per_strip - 1) / rows_per_strip;
  if (f.strip_offsets.size() < strips || f.strip_byte_counts.size() < strips) {
    malformed("expected " + std::to_string(strips) + " strips");
  }

  std::vector<std::uint16_t> pixels(width * height);
  for (std::size_t s = 0; s < strips; ++s) {
    const std::size_t first_row = s * rows_per_strip;
    const std::size_t strip_rows = std::min(rows_per_strip, height - first_row);
    const std::size_t need = strip_rows * row_bytes;
    const std::size_t offset = f.strip_offsets[s];
    if (f.strip_byte_counts[s] < need) malformed("strip " + std::to_string(s) + " is short");
    if (offset > bytes.size() || need > bytes.size() - offset) {
      malformed("strip " + std::to_string(s) + " extends past end of file");
    }
    std::uint16_t* dst = pixels.data() + first_row * width;
    const std::size_t n = strip_rows * width;
    for (std::size_t i = 0; i < n; ++i) {
      dst[i] = bytes_per_sample == 1 ? bytes[offset + i] : reader.u16(offset + 2 * i);
    }
  }
  return QuantizedGrid({height, width}, static_cast<int>(f.bits), std::move(pixels));
}

}  // namespace wavimg
