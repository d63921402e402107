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

#include <algorithm>
#include <cmath>

#include "test_support.h"
#include "wavimg/pipeline.h"
#include "wavimg/synth.h"

namespace wavimg {
namespace {

using testing::error_code_of;

AudioSignal noise(std::size_t n, std::uint64_t seed = 1) {
  SynthOptions opts;
  opts.sample_count = n;
  opts.seed = seed;
  return synthesize(opts);
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  REQUIRE(a.size() == b.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

TEST_CASE("offset mode, 16-bit lossless formats: decoded audio within 2 * 7.63e-6") {
  const AudioSignal audio = noise(30'001);
  for (ImageFormat format : {ImageFormat::kPng, ImageFormat::kTiff}) {
    CAPTURE(to_string(format));
    EncodeOptions opts;
    opts.mode = PrepMode::kOffsetFull;
    opts.codec = {format, 16};
    opts.cols_hint = 100;
    const EncodedImage enc = encode_signal(audio, opts);
    CHECK(enc.shape.rows == 301);
    CHECK(enc.manifest.meaningful_count == 30'001);
    CHECK(enc.manifest.source_total_samples == 30'001);

    const auto prepared = decode_prepared(enc.image, format, enc.manifest);
    CHECK(max_abs_diff(prepared, enc.prepared) <= 1.0 / (2 * 65535.0));

    // Offset mode doubles the prepared-domain error.
    const AudioSignal back = decode_signal(enc.image, format, enc.manifest);
    CHECK(back.sample_rate == audio.sample_rate);
    CHECK(max_abs_diff(back.samples, audio.samples) <= 1.0 / 65535.0 + 1e-15);
    CHECK(max_abs_diff(back.samples, reference_signal(enc).samples) <= 1.0 / 65535.0 + 1e-15);
  }
}

TEST_CASE("positive mode keeps only nonnegative samples and decodes to them") {
  const AudioSignal audio = noise(20'000);
  EncodeOptions opts;
  opts.codec = {ImageFormat::kPng, 16};
  opts.cols_hint = 128;
  const EncodedImage enc = encode_signal(audio, opts);
  const auto expected = filter_positive(audio);
  CHECK(enc.prepared == expected);
  CHECK(enc.manifest.meaningful_count == expected.size());
  CHECK(enc.manifest.source_total_samples == 20'000);
  const AudioSignal back = decode_signal(enc.image, ImageFormat::kPng, enc.manifest);
  REQUIRE(back.samples.size() == expected.size());
  CHECK(std::all_of(back.samples.begin(), back.samples.end(), [](double v) { return v >= 0.0; }));
  CHECK(max_abs_diff(back.samples, expected) <= 1.0 / (2 * 65535.0));
}

TEST_CASE("take and explicit shape") {
  const AudioSignal audio = noise(50'000);
  EncodeOptions opts;
  opts.codec = {ImageFormat::kTiff, 8};
  opts.take = 1000;
  opts.shape = GridShape{10, 200};
  const EncodedImage enc = encode_signal(audio, opts);
  CHECK(enc.prepared.size() == 1000);
  CHECK(enc.manifest.rows == 10);
  CHECK(enc.manifest.cols == 200);
  CHECK(enc.manifest.meaningful_count == 1000);
  CHECK(decode_prepared(enc.image, ImageFormat::kTiff, enc.manifest).size() == 1000);

  opts.shape = GridShape{4, 200};
  CHECK(error_code_of([&] { encode_signal(audio, opts); }) == ErrorCode::kShapeMismatch);
  opts.shape.reset();
  opts.take = 0;
  CHECK(error_code_of([&] { encode_signal(audio, opts); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("manifest disagreeing with the image is a geometry mismatch") {
  const AudioSignal audio = noise(4000);
  EncodeOptions opts;
  opts.codec = {ImageFormat::kPng, 16};
  opts.cols_hint = 40;
  const EncodedImage enc = encode_signal(audio, opts);

  Manifest rows = enc.manifest;
  rows.rows -= 1;
  rows.meaningful_count = std::min(rows.meaningful_count, rows.rows * rows.cols);
  CHECK(error_code_of([&] { decode_prepared(enc.image, ImageFormat::kPng, rows); }) ==
        ErrorCode::kGeometryMismatch);

  Manifest bits = enc.manifest;
  bits.bits = 8;
  CHECK(error_code_of([&] { decode_prepared(enc.image, ImageFormat::kPng, bits); }) ==
        ErrorCode::kGeometryMismatch);
}

TEST_CASE("JPEG needs 8 bits") {
  EncodeOptions opts;
  opts.codec = {ImageFormat::kJpeg, 16};
  CHECK(error_code_of([&] { encode_signal(noise(100), opts); }) == ErrorCode::kUnsupportedDepth);
}

TEST_CASE("positive mode on an all-negative signal") {
  AudioSignal audio;
  audio.samples.assign(10, -0.5);
  EncodeOptions opts;
  const EncodedImage enc = encode_signal(audio, opts);
  CHECK(enc.prepared.empty());
  CHECK(enc.shape.rows == 1);
  CHECK(enc.manifest.meaningful_count == 0);
  CHECK(decode_signal(enc.image, ImageFormat::kPng, enc.manifest).samples.empty());
}

}  // namespace
}  // namespace wavimg
