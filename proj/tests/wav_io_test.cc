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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "test_support.h"
#include "wavimg/error.h"
#include "wavimg/wav_io.h"

namespace wavimg {
namespace {

using testing::Bytes;
using testing::data_chunk;
using testing::error_code_of;
using testing::fmt_chunk;
using testing::riff_file;

std::vector<std::uint8_t> mono16(const std::vector<std::int16_t>& values, std::uint32_t rate = 44100) {
  Bytes payload;
  for (auto v : values) payload.i16(v);
  auto chunks = fmt_chunk(1, 1, rate, 16);
  const auto data = data_chunk(payload.data);
  chunks.insert(chunks.end(), data.begin(), data.end());
  return riff_file(chunks);
}

TEST_CASE("empty data chunk parses to an empty signal") {
  const AudioSignal s = parse_wav(mono16({}));
  CHECK(s.samples.empty());
  CHECK(s.sample_rate == 44100);
  CHECK(s.source_bits == 16);
  CHECK(s.channels_in_source == 1);
}

TEST_CASE("16-bit samples are divided by 32768") {
  const AudioSignal s = parse_wav(mono16({0, 16384, -16384, -32768, 32767}));
  REQUIRE(s.samples.size() == 5);
  CHECK(s.samples[0] == 0.0);
  CHECK(s.samples[1] == 0.5);
  CHECK(s.samples[2] == -0.5);
  CHECK(s.samples[3] == -1.0);
  CHECK(s.samples[4] == 32767.0 / 32768.0);
}

TEST_CASE("8-bit samples are unsigned around 128") {
  auto chunks = fmt_chunk(1, 1, 8000, 8);
  const auto data = data_chunk({0, 128, 192, 255});
  chunks.insert(chunks.end(), data.begin(), data.end());
  const AudioSignal s = parse_wav(riff_file(chunks));
  REQUIRE(s.samples.size() == 4);
  CHECK(s.samples[0] == -1.0);
  CHECK(s.samples[1] == 0.0);
  CHECK(s.samples[2] == 0.5);
  CHECK(s.samples[3] == 127.0 / 128.0);
  CHECK(s.source_bits == 8);
}

TEST_CASE("stereo keeps channel 0 only") {
  Bytes payload;
  payload.i16(16384).i16(-32768).i16(-8192).i16(100);
  auto chunks = fmt_chunk(1, 2, 44100, 16);
  const auto data = data_chunk(payload.data);
  chunks.insert(chunks.end(), data.begin(), data.end());
  const AudioSignal s = parse_wav(riff_file(chunks));
  REQUIRE(s.samples.size() == 2);
  CHECK(s.samples[0] == 0.5);
  CHECK(s.samples[1] == -0.25);
  CHECK(s.channels_in_source == 2);
}

TEST_CASE("unknown chunks before data are skipped") {
  const auto plain = parse_wav(mono16({1, 2, 3, -4}));

  auto chunks = fmt_chunk(1, 1, 44100, 16);
  Bytes list;
  list.tag("LIST").u32(5).tag("INFOx").u8(0);  // odd size, padded
  chunks.insert(chunks.end(), list.data.begin(), list.data.end());
  Bytes payload;
  payload.i16(1).i16(2).i16(3).i16(-4);
  const auto data = data_chunk(payload.data);
  chunks.insert(chunks.end(), data.begin(), data.end());
  CHECK(parse_wav(riff_file(chunks)) == plain);
}

TEST_CASE("data chunk may precede fmt") {
  Bytes payload;
  payload.i16(16384);
  auto chunks = data_chunk(payload.data);
  const auto fmt = fmt_chunk(1, 1, 22050, 16);
  chunks.insert(chunks.end(), fmt.begin(), fmt.end());
  const AudioSignal s = parse_wav(riff_file(chunks));
  CHECK(s.samples == std::vector<double>{0.5});
  CHECK(s.sample_rate == 22050);
}

TEST_CASE("structural damage is MalformedRiff") {
  auto good = mono16({1, 2, 3});

  SUBCASE("RIFX magic") {
    auto bad = good;
    bad[3] = 'X';
    CHECK(error_code_of([&] { parse_wav(bad); }) == ErrorCode::kMalformedRiff);
  }
  SUBCASE("form type is not WAVE") {
    auto bad = good;
    bad[8] = 'A';
    CHECK(error_code_of([&] { parse_wav(bad); }) == ErrorCode::kMalformedRiff);
  }
  SUBCASE("shorter than the RIFF header") {
    CHECK(error_code_of([&] { parse_wav(std::vector<std::uint8_t>(good.begin(), good.begin() + 10)); }) ==
          ErrorCode::kMalformedRiff);
    CHECK(error_code_of([&] { parse_wav(std::vector<std::uint8_t>{}); }) == ErrorCode::kMalformedRiff);
  }
  SUBCASE("data chunk shorter than declared") {
    good.pop_back();
    CHECK(error_code_of([&] { parse_wav(good); }) == ErrorCode::kMalformedRiff);
  }
  SUBCASE("missing data chunk") {
    CHECK(error_code_of([&] { parse_wav(riff_file(fmt_chunk(1, 1, 8000, 16))); }) == ErrorCode::kMalformedRiff);
  }
  SUBCASE("missing fmt chunk") {
    CHECK(error_code_of([&] { parse_wav(riff_file(data_chunk({0, 0}))); }) == ErrorCode::kMalformedRiff);
  }
  SUBCASE("truncated chunk header") {
    auto chunks = fmt_chunk(1, 1, 8000, 16);
    chunks.insert(chunks.end(), {'d', 'a', 't'});
    CHECK(error_code_of([&] { parse_wav(riff_file(chunks)); }) == ErrorCode::kMalformedRiff);
  }
  SUBCASE("fmt chunk too small") {
    Bytes fmt;
    fmt.tag("fmt ").u32(8).u16(1).u16(1).u32(8000);
    auto chunks = fmt.data;
    const auto data = data_chunk({0, 0});
    chunks.insert(chunks.end(), data.begin(), data.end());
    CHECK(error_code_of([&] { parse_wav(riff_file(chunks)); }) == ErrorCode::kMalformedRiff);
  }
  SUBCASE("zero channels") {
    auto chunks = fmt_chunk(1, 0, 8000, 16);
    const auto data = data_chunk({0, 0});
    chunks.insert(chunks.end(), data.begin(), data.end());
    CHECK(error_code_of([&] { parse_wav(riff_file(chunks)); }) == ErrorCode::kMalformedRiff);
  }
}

TEST_CASE("non-LPCM payloads are UnsupportedFormat") {
  const auto with_fmt = [](std::uint16_t format, std::uint16_t bits) {
    auto chunks = fmt_chunk(format, 1, 8000, bits);
    const auto data = data_chunk(std::vector<std::uint8_t>(12, 0));
    chunks.insert(chunks.end(), data.begin(), data.end());
    return riff_file(chunks);
  };
  CHECK(error_code_of([&] { parse_wav(with_fmt(3, 32)); }) == ErrorCode::kUnsupportedFormat);       // float
  CHECK(error_code_of([&] { parse_wav(with_fmt(0xFFFE, 16)); }) == ErrorCode::kUnsupportedFormat);  // extensible
  CHECK(error_code_of([&] { parse_wav(with_fmt(1, 24)); }) == ErrorCode::kUnsupportedFormat);
  CHECK(error_code_of([&] { parse_wav(with_fmt(1, 32)); }) == ErrorCode::kUnsupportedFormat);
}

TEST_CASE("write_wav emits the canonical 44-byte header") {
  AudioSignal s;
  s.sample_rate = 42100;
  s.samples = {0.5};
  const auto bytes = write_wav(s, 16);
  REQUIRE(bytes.size() == 46);
  CHECK(std::string(bytes.begin(), bytes.begin() + 4) == "RIFF");
  CHECK(bytes[4] == 38);  // 36 + data
  CHECK(std::string(bytes.begin() + 8, bytes.begin() + 16) == "WAVEfmt ");
  CHECK(bytes[16] == 16);
  CHECK(bytes[20] == 1);   // PCM
  CHECK(bytes[22] == 1);   // mono
  CHECK((bytes[24] | bytes[25] << 8) == 42100);
  CHECK((bytes[28] | bytes[29] << 8 | bytes[30] << 16) == 84200);  // byte rate
  CHECK(bytes[32] == 2);   // block align
  CHECK(bytes[34] == 16);  // bits
  CHECK(std::string(bytes.begin() + 36, bytes.begin() + 40) == "data");
  CHECK(bytes[40] == 2);
  // 0.5 * 32768 = 16384 = 0x4000, little-endian.
  CHECK(bytes[44] == 0x00);
  CHECK(bytes[45] == 0x40);
}

TEST_CASE("write_wav of an empty signal has a zero-length data chunk") {
  AudioSignal s;
  s.sample_rate = 44100;
  const auto bytes = write_wav(s, 16);
  CHECK(bytes.size() == kCanonicalWavHeaderBytes);
  CHECK(bytes[40] == 0);
  CHECK(parse_wav(bytes).samples.empty());
}

TEST_CASE("write_wav rounds half away from zero and clamps") {
  AudioSignal s;
  s.samples = {1.5 / 32768, -1.5 / 32768, 1.0, -1.2, 2.0};
  const auto back = parse_wav(write_wav(s, 16)).samples;
  CHECK(back[0] == 2.0 / 32768);
  CHECK(back[1] == -2.0 / 32768);
  CHECK(back[2] == 32767.0 / 32768);
  CHECK(back[3] == -1.0);
  CHECK(back[4] == 32767.0 / 32768);
}

TEST_CASE("8-bit writing mirrors the 16-bit rule") {
  AudioSignal s;
  s.samples = {0.0, 0.5, -1.0, 1.0, 0.5 / 128, -0.5 / 128};
  const auto bytes = write_wav(s, 8);
  CHECK(bytes.size() == kCanonicalWavHeaderBytes + 6);
  CHECK(bytes[44] == 128);
  CHECK(bytes[45] == 192);
  CHECK(bytes[46] == 0);
  CHECK(bytes[47] == 255);
  CHECK(bytes[48] == 129);
  CHECK(bytes[49] == 127);
}

TEST_CASE("odd-length 8-bit data gets a pad byte") {
  AudioSignal s;
  s.samples = {0.0, 0.1, 0.2};
  const auto bytes = write_wav(s, 8);
  CHECK(bytes.size() == kCanonicalWavHeaderBytes + 4);
  CHECK(bytes[40] == 3);
  CHECK(bytes[4] == 36 + 4);
  CHECK(parse_wav(bytes).samples.size() == 3);
}

TEST_CASE("write_wav rejects unsupported depths and NaN") {
  AudioSignal s;
  s.samples = {0.0};
  CHECK(error_code_of([&] { write_wav(s, 24); }) == ErrorCode::kUnsupportedFormat);
  CHECK(error_code_of([&] { write_wav(s, 0); }) == ErrorCode::kUnsupportedFormat);
  s.samples = {std::nan("")};
  CHECK(error_code_of([&] { write_wav(s, 16); }) == ErrorCode::kValueOutOfRange);
  s.samples = {0.0};
  s.sample_rate = 0;
  CHECK(error_code_of([&] { write_wav(s, 16); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("roundtrip [0.25, -0.75] at 16 bits") {
  AudioSignal s;
  s.samples = {0.25, -0.75};
  const auto back = parse_wav(write_wav(s, 16));
  REQUIRE(back.samples.size() == 2);
  CHECK(std::abs(back.samples[0] - 0.25) <= 1.0 / 32768);
  CHECK(std::abs(back.samples[1] + 0.75) <= 1.0 / 32768);
}

TEST_CASE("property: 16-bit roundtrip stays within 1/32768") {
  testing::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const AudioSignal s = testing::random_signal(rng, rng.index(0, 300), static_cast<std::uint32_t>(rng.index(1, 96000)));
    const AudioSignal back = parse_wav(write_wav(s, 16));
    REQUIRE(back.samples.size() == s.samples.size());
    CHECK(back.sample_rate == s.sample_rate);
    for (std::size_t i = 0; i < s.samples.size(); ++i) {
      REQUIRE(std::abs(back.samples[i] - s.samples[i]) <= 1.0 / 32768);
      REQUIRE(back.samples[i] >= -1.0);
      REQUIRE(back.samples[i] < 1.0);
    }
  }
}

TEST_CASE("property: 8-bit roundtrip stays within 1/128") {
  testing::Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const AudioSignal s = testing::random_signal(rng, rng.index(0, 300));
    const AudioSignal back = parse_wav(write_wav(s, 8));
    REQUIRE(back.samples.size() == s.samples.size());
    for (std::size_t i = 0; i < s.samples.size(); ++i) {
      REQUIRE(std::abs(back.samples[i] - s.samples[i]) <= 1.0 / 128);
    }
  }
}

TEST_CASE("fuzz: mutated files never escape the error contract") {
  testing::Rng rng(99);
  AudioSignal base;
  base.samples = {0.1, -0.2, 0.3, -0.4};
  const auto good = write_wav(base, 16);
  for (int trial = 0; trial < 2000; ++trial) {
    auto bytes = good;
    const std::size_t flips = rng.index(1, 4);
    for (std::size_t f = 0; f < flips; ++f) bytes[rng.index(0, 47)] = rng.byte();
    if (rng.coin()) bytes.resize(rng.index(0, bytes.size()));
    try {
      const AudioSignal s = parse_wav(bytes);
      for (double x : s.samples) REQUIRE((x >= -1.0 && x < 1.0));
    } catch (const Error& e) {
      REQUIRE((e.code() == ErrorCode::kMalformedRiff || e.code() == ErrorCode::kUnsupportedFormat));
    }
  }
}

}  // namespace
}  // namespace wavimg
