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
#include <sstream>
#include <string>

#include "test_support.h"
#include "wavimg/analysis.h"
#include "wavimg/pipeline.h"
#include "wavimg/synth.h"

namespace wavimg {
namespace {

using testing::error_code_of;
using testing::Rng;
using Values = std::vector<double>;

constexpr double kTol = 1e-12;

TEST_CASE("compute_error is original minus decoded") {
  const Values e = compute_error(Values{0.5, 0.2}, Values{0.4, 0.25});
  REQUIRE(e.size() == 2);
  CHECK(std::abs(e[0] - 0.1) <= kTol);
  CHECK(std::abs(e[1] - -0.05) <= kTol);
  CHECK(compute_error(Values{0.3, -0.7, 1.0}, Values{0.3, -0.7, 1.0}) == Values{0.0, 0.0, 0.0});
  CHECK(compute_error(Values{}, Values{}).empty());
  CHECK(error_code_of([] { compute_error(Values{1, 2, 3}, Values{1, 2}); }) == ErrorCode::kLengthMismatch);
}

TEST_CASE("summarize matches hand arithmetic") {
  const ErrorStats s = summarize(Values{0.1, -0.05});
  CHECK(std::abs(s.min - -0.05) <= kTol);
  CHECK(std::abs(s.max - 0.1) <= kTol);
  CHECK(std::abs(s.rmse - std::sqrt((0.01 + 0.0025) / 2)) <= kTol);
  CHECK(std::abs(s.rmse - 0.0790569415) <= 1e-10);
  CHECK(std::abs(s.max_abs - 0.1) <= kTol);

  const ErrorStats one = summarize(Values{-0.3});
  CHECK(one.min == -0.3);
  CHECK(one.max == -0.3);
  CHECK(std::abs(one.rmse - 0.3) <= kTol);
  CHECK(one.max_abs == 0.3);

  const ErrorStats zero = summarize(Values(17, 0.0));
  CHECK(zero.min == 0.0);
  CHECK(zero.max == 0.0);
  CHECK(zero.rmse == 0.0);
  CHECK(zero.max_abs == 0.0);

  CHECK(error_code_of([] { summarize(Values{}); }) == ErrorCode::kEmptyInput);
}

TEST_CASE("summarize agrees with a two-pass long double oracle") {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const Values e = [&] {
      Values v(rng.index(1, 500));
      for (auto& x : v) x = rng.uniform(-1.0, 1.0);
      return v;
    }();
    long double sq = 0;
    double lo = e[0], hi = e[0], big = 0;
    for (double x : e) {
      sq += static_cast<long double>(x) * x;
      lo = std::min(lo, x);
      hi = std::max(hi, x);
      big = std::max(big, std::abs(x));
    }
    const ErrorStats s = summarize(e);
    REQUIRE(s.min == lo);
    REQUIRE(s.max == hi);
    REQUIRE(s.max_abs == big);
    REQUIRE(std::abs(s.rmse - static_cast<double>(std::sqrt(sq / e.size()))) <= kTol);
    REQUIRE(s.rmse <= s.max_abs);
  }
}

TEST_CASE("antisymmetry and zero identity") {
  Rng rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = rng.index(0, 64);
    Values a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = rng.uniform(-1.0, 1.0);
      b[i] = rng.uniform(-1.0, 1.0);
    }
    const Values ab = compute_error(a, b);
    const Values ba = compute_error(b, a);
    for (std::size_t i = 0; i < n; ++i) REQUIRE(ab[i] == -ba[i]);
    for (double z : compute_error(a, a)) REQUIRE(z == 0.0);
  }
}

TEST_CASE("summary bounds and report consistency over random errors") {
  Rng rng(30);
  for (int trial = 0; trial < 1000; ++trial) {
    Values e(rng.index(1, 200));
    for (auto& x : e) x = rng.coin() ? rng.uniform(-1.0, 1.0) : 0.0;
    const ErrorStats s = summarize(e);
    double mean = 0.0;
    for (double x : e) mean += x;
    mean /= e.size();
    REQUIRE(s.min <= mean + 1e-15);
    REQUIRE(mean <= s.max + 1e-15);
    REQUIRE(s.max_abs == std::max(std::abs(s.min), std::abs(s.max)));
    Values neg(e.size());
    std::transform(e.begin(), e.end(), neg.begin(), [](double x) { return -x; });
    REQUIRE(s.min == -summarize(neg).max);
    const bool all_zero = std::all_of(e.begin(), e.end(), [](double x) { return x == 0.0; });
    REQUIRE((s.rmse == 0.0) == all_zero);
  }
}

TEST_CASE("build_report") {
  const Values x(50, 0.25);
  const ErrorReport r = build_report("PNG/16", x, x, 1000, 250);
  CHECK(r.codec_label == "PNG/16");
  CHECK(r.rmse == 0.0);
  CHECK(r.max_abs_error == 0.0);
  CHECK(r.compression_ratio == 4.0);
  CHECK(r.compared_samples == 50);
  CHECK(r.original_bytes == 1000);
  CHECK(r.encoded_bytes == 250);

  CHECK(error_code_of([&] { build_report("x", x, Values(49, 0.25), 10, 10); }) == ErrorCode::kLengthMismatch);
  CHECK(error_code_of([&] { build_report("x", Values{}, Values{}, 10, 10); }) == ErrorCode::kEmptyInput);
  CHECK(error_code_of([&] { build_report("x", x, x, 10, 0); }) == ErrorCode::kInvalidArgument);

  // Report fields agree with compute_error + summarize.
  Rng rng(4);
  const Values a = testing::random_unit_values(rng, 300);
  const Values b = testing::random_unit_values(rng, 300);
  const ErrorReport rr = build_report("r", a, b, 7, 3);
  const ErrorStats s = summarize(compute_error(a, b));
  CHECK(rr.error_min == s.min);
  CHECK(rr.error_max == s.max);
  CHECK(rr.rmse == s.rmse);
  CHECK(rr.max_abs_error == s.max_abs);
  CHECK(rr.compression_ratio == doctest::Approx(7.0 / 3.0));
}

TEST_CASE("lossless 16-bit pipeline stays inside the quantization bound; JPEG does not") {
  SynthOptions opts;
  opts.sample_count = 200'000;
  const AudioSignal audio = synthesize(opts);
  const double bound = 1.0 / (2.0 * 65535.0);

  EncodeOptions png_opts;
  png_opts.mode = PrepMode::kOffsetFull;
  png_opts.codec = {ImageFormat::kPng, 16};
  const EncodedImage png = encode_signal(audio, png_opts);
  const Values png_back = decode_prepared(png.image, ImageFormat::kPng, png.manifest);
  const std::uint64_t wav_bytes = 44 + 2 * png.prepared.size();
  const ErrorReport lossless = build_report("PNG/16", png.prepared, png_back, wav_bytes, png.image.size());
  CHECK(lossless.max_abs_error <= bound);
  CHECK(lossless.max_abs_error <= 2e-4);
  CHECK(bound == doctest::Approx(7.63e-6).epsilon(1e-3));

  EncodeOptions jpg_opts = png_opts;
  jpg_opts.codec = {ImageFormat::kJpeg, 8, 75};
  const EncodedImage jpg = encode_signal(audio, jpg_opts);
  const Values jpg_back = decode_prepared(jpg.image, ImageFormat::kJpeg, jpg.manifest);
  const ErrorReport lossy = build_report("JPEG/8", jpg.prepared, jpg_back, wav_bytes, jpg.image.size());
  CHECK(lossy.max_abs_error > lossless.max_abs_error);
  MESSAGE("PNG/16 max_abs " << lossless.max_abs_error << ", JPEG/8 max_abs " << lossy.max_abs_error);
}

TEST_CASE("emit_csv") {
  std::ostringstream empty;
  emit_csv(Values{}, empty);
  CHECK(empty.str() == "index,error\n");

  std::ostringstream one;
  emit_csv(Values{0.5}, one);
  CHECK(one.str() == "index,error\n0,0.5\n");

  Rng rng(12);
  Values e(1000);
  for (auto& x : e) x = rng.uniform(-0.1, 0.1);
  std::ostringstream out;
  emit_csv(e, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "index,error");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    REQUIRE(std::stoul(line.substr(0, comma)) == rows);
    REQUIRE(std::abs(std::stod(line.substr(comma + 1)) - e[rows]) <= 1e-9);
    ++rows;
  }
  CHECK(rows == 1000);
  const std::string text = out.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 1001);
}

TEST_CASE("emit_csv reports a failed sink") {
  std::ostringstream bad;
  bad.setstate(std::ios::badbit);
  CHECK(error_code_of([&] { emit_csv(Values{1.0}, bad); }) == ErrorCode::kIo);
}

TEST_CASE("report table has the fixed column order") {
  const std::vector<ErrorReport> reports = {build_report("PNG/16", Values{0.5, 0.2}, Values{0.4, 0.25}, 1000, 250)};
  std::ostringstream out;
  render_report_table(reports, out);
  std::istringstream in(out.str());
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  std::istringstream hs(header), rs(row);
  std::vector<std::string> h, r;
  for (std::string w; hs >> w;) h.push_back(w);
  for (std::string w; rs >> w;) r.push_back(w);
  CHECK(h == std::vector<std::string>{"label", "error_min", "error_max", "rmse", "max_abs", "original_bytes",
                                      "encoded_bytes", "ratio"});
  REQUIRE(r.size() == 8);
  CHECK(r[0] == "PNG/16");
  CHECK(std::stod(r[1]) == doctest::Approx(-0.05));
  CHECK(std::stod(r[2]) == doctest::Approx(0.1));
  CHECK(std::stod(r[3]) == doctest::Approx(0.0790569).epsilon(1e-5));
  CHECK(std::stod(r[4]) == doctest::Approx(0.1));
  CHECK(r[5] == "1000");
  CHECK(r[6] == "250");
  CHECK(std::stod(r[7]) == 4.0);
}

}  // namespace
}  // namespace wavimg
