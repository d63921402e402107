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

#include "wavimg/wav_io.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <optional>
#include <string>

#include "byte_io.h"
#include "wavimg/error.h"

namespace wavimg {
namespace {

using detail::load_le16;
using detail::load_le32;

constexpr std::uint16_t kPcmFormat = 1;

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedRiff, what);
}

bool has_tag(std::span<const std::uint8_t> b, std::size_t at, const char* tag) {
  return std::memcmp(b.data() + at, tag, 4) == 0;
}

WavFormat decode_fmt(std::span<const std::uint8_t> payload) {
  if (payload.size() < 16) {
    malformed("fmt chunk has " + std::to_string(payload.size()) +
              " bytes, need at least 16");
  }
  WavFormat fmt;
  fmt.audio_format_code = load_le16(payload, 0);
  fmt.channels = load_le16(payload, 2);
  fmt.sample_rate = load_le32(payload, 4);
  fmt.bits_per_sample = load_le16(payload, 14);
  if (fmt.audio_format_code != kPcmFormat) {
    throw Error(ErrorCode::kUnsupportedFormat,
                "audio format code " + std::to_string(fmt.audio_format_code) +
                    " is not integer PCM");
  }
  if (fmt.bits_per_sample != 8 && fmt.bits_per_sample != 16) {
    throw Error(ErrorCode::kUnsupportedFormat,
                std::to_string(fmt.bits_per_sample) +
                    " bits per sample (only 8 and 16 are supported)");
  }
  if (fmt.channels == 0) malformed("fmt chunk declares zero channels");
  if (fmt.sample_rate == 0) malformed("fmt chunk declares a zero sample rate");
  return fmt;
}

struct ChunkScan {
  WavFormat format;
  std::span<const std::uint8_t> data;
};

// Walks the chunk list until both "fmt " and "data" are seen. Every read is
// bounds-checked against `bytes`; declared sizes are never trusted.
ChunkScan scan_chunks(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12) malformed("file is shorter than the RIFF header");
  if (!has_tag(bytes, 0, "RIFF")) malformed("missing RIFF magic");
  if (!has_tag(bytes, 8, "WAVE")) malformed("RIFF form type is not WAVE");

  std::optional<WavFormat> format;
  std::optional<std::span<const std::uint8_t>> data;
  std::size_t pos = 12;
  while (pos < bytes.size() && !(format && data)) {
    if (bytes.size() - pos < 8) malformed("truncated chunk header");
    const std::uint32_t size = load_le32(bytes, pos + 4);
    const std::size_t body = pos + 8;
    const bool is_data = has_tag(bytes, pos, "data");
    if (size > bytes.size() - body) {
      malformed(is_data ? "data chunk shorter than declared"
                        : "chunk extends past end of file");
    }
    const auto payload = bytes.subspan(body, size);
    if (has_tag(bytes, pos, "fmt ")) {
      if (format) malformed("duplicate fmt chunk");
      format = decode_fmt(payload);
    } else if (is_data) {
      data = payload;
    }
    // Odd-sized chunks carry a pad byte; a missing final pad is tolerated.
    pos = body + size + (size & 1u);
  }
  if (!format) malformed("missing fmt chunk");
  if (!data) malformed("missing data chunk");
  return {*format, *data};
}

}  // namespace

WavFormat parse_wav_format(std::span<const std::uint8_t> bytes) {
  return scan_chunks(bytes).format;
}

AudioSignal parse_wav(std::span<const std::uint8_t> bytes) {
  const ChunkScan scan = scan_chunks(bytes);
  const std::size_t sample_bytes = scan.format.bits_per_sample / 8;
  const std::size_t frame_bytes = sample_bytes * scan.format.channels;
  const std::size_t frames = scan.data.size() / frame_bytes;

  AudioSignal signal;
  signal.sample_rate = scan.format.sample_rate;
  signal.source_bits = scan.format.bits_per_sample;
  signal.channels_in_source = scan.format.channels;
  signal.samples.resize(frames);
  for (std::size_t i = 0; i < frames; ++i) {
    const std::size_t at = i * frame_bytes;
    if (sample_bytes == 2) {
      const auto raw = static_cast<std::int16_t>(load_le16(scan.data, at));
      signal.samples[i] = static_cast<double>(raw) / 32768.0;
    } else {
      signal.samples[i] = (static_cast<double>(scan.data[at]) - 128.0) / 128.0;
    }
  }
  return signal;
}

std::vector<std::uint8_t> write_wav(const AudioSignal& signal, int target_bits) {
  if (target_bits != 8 && target_bits != 16) {
    throw Error(ErrorCode::kUnsupportedFormat,
                "cannot write " + std::to_string(target_bits) +
                    "-bit PCM (only 8 and 16 are supported)");
  }
  if (signal.sample_rate == 0 ||
      signal.sample_rate > std::numeric_limits<std::uint32_t>::max() / 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "sample rate " + std::to_string(signal.sample_rate) + " is out of range");
  }
  const std::size_t sample_bytes = static_cast<std::size_t>(target_bits) / 8;
  const std::uint64_t data_size =
      static_cast<std::uint64_t>(signal.samples.size()) * sample_bytes;
  const std::uint64_t pad = data_size & 1u;
  if (data_size + pad + 36 > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::kInvalidArgument, "signal too long for a RIFF file");
  }

  std::vector<std::uint8_t> out;
  out.reserve(kCanonicalWavHeaderBytes + data_size + pad);
  detail::put_tag(out, "RIFF");
  detail::put_le32(out, static_cast<std::uint32_t>(36 + data_size + pad));
  detail::put_tag(out, "WAVE");
  detail::put_tag(out, "fmt ");
  detail::put_le32(out, 16);
  detail::put_le16(out, kPcmFormat);
  detail::put_le16(out, 1);
  detail::put_le32(out, signal.sample_rate);
  detail::put_le32(out, signal.sample_rate * static_cast<std::uint32_t>(sample_bytes));
  detail::put_le16(out, static_cast<std::uint16_t>(sample_bytes));
  detail::put_le16(out, static_cast<std::uint16_t>(target_bits));
  detail::put_tag(out, "data");
  detail::put_le32(out, static_cast<std::uint32_t>(data_size));

  const double scale = target_bits == 16 ? 32768.0 : 128.0;
  for (const double x : signal.samples) {
    if (std::isnan(x)) {
      throw Error(ErrorCode::kValueOutOfRange, "NaN sample cannot be encoded");
    }
    const double code = std::clamp(detail::round_half_away(x * scale), -scale, scale - 1.0);
    if (target_bits == 16) {
      detail::put_le16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(code)));
    } else {
      out.push_back(static_cast<std::uint8_t>(static_cast<int>(code) + 128));
    }
  }
  if (pad) out.push_back(0);
  return out;
}

}  // namespace wavimg
