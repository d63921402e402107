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

#include <benchmark/benchmark.h>

#include "wavimg/analysis.h"
#include "wavimg/pipeline.h"
#include "wavimg/raster_codec.h"
#include "wavimg/signal_prep.h"
#include "wavimg/synth.h"
#include "wavimg/wav_io.h"

namespace wavimg {
namespace {

constexpr std::size_t kRows = 1000;
constexpr std::size_t kCols = 2000;

const AudioSignal& audio() {
  static const AudioSignal signal = [] {
    SynthOptions opts;
    opts.sample_count = kRows * kCols;
    return synthesize(opts);
  }();
  return signal;
}

const SampleGrid& grid() {
  static const SampleGrid g = reshape_to_grid(apply_mode(audio(), PrepMode::kOffsetFull), {kRows, kCols}, false);
  return g;
}

void BM_ParseWav(benchmark::State& state) {
  const auto bytes = write_wav(audio(), 16);
  for (auto _ : state) benchmark::DoNotOptimize(parse_wav(bytes));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(bytes.size()));
}
BENCHMARK(BM_ParseWav)->Unit(benchmark::kMillisecond);

void BM_WriteWav(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(write_wav(audio(), 16));
}
BENCHMARK(BM_WriteWav)->Unit(benchmark::kMillisecond);

void BM_Reshape(benchmark::State& state) {
  const auto prepared = apply_mode(audio(), PrepMode::kOffsetFull);
  for (auto _ : state) benchmark::DoNotOptimize(reshape_to_grid(prepared, {kRows, kCols}, false));
}
BENCHMARK(BM_Reshape)->Unit(benchmark::kMillisecond);

void BM_Quantize(benchmark::State& state) {
  const int bits = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(quantize(grid(), bits));
}
BENCHMARK(BM_Quantize)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Encode(benchmark::State& state) {
  const auto format = static_cast<ImageFormat>(state.range(0));
  const int bits = static_cast<int>(state.range(1));
  const QuantizedGrid q = quantize(grid(), bits);
  const CodecSpec spec{format, bits};
  std::size_t size = 0;
  for (auto _ : state) {
    const auto bytes = encode_image(q, spec);
    size = bytes.size();
    benchmark::DoNotOptimize(bytes.data());
  }
  state.counters["bytes"] = static_cast<double>(size);
}
BENCHMARK(BM_Encode)
    ->Args({static_cast<int>(ImageFormat::kPng), 16})
    ->Args({static_cast<int>(ImageFormat::kPng), 8})
    ->Args({static_cast<int>(ImageFormat::kTiff), 16})
    ->Args({static_cast<int>(ImageFormat::kJpeg), 8})
    ->Unit(benchmark::kMillisecond);

void BM_Decode(benchmark::State& state) {
  const auto format = static_cast<ImageFormat>(state.range(0));
  const int bits = static_cast<int>(state.range(1));
  const auto bytes = encode_image(quantize(grid(), bits), CodecSpec{format, bits});
  for (auto _ : state) benchmark::DoNotOptimize(decode_image(bytes, format));
}
BENCHMARK(BM_Decode)
    ->Args({static_cast<int>(ImageFormat::kPng), 16})
    ->Args({static_cast<int>(ImageFormat::kTiff), 16})
    ->Args({static_cast<int>(ImageFormat::kJpeg), 8})
    ->Unit(benchmark::kMillisecond);

void BM_ErrorReport(benchmark::State& state) {
  const auto prepared = apply_mode(audio(), PrepMode::kOffsetFull);
  const auto decoded = flatten_grid(dequantize(quantize(grid(), 16)));
  for (auto _ : state) benchmark::DoNotOptimize(build_report("PNG/16", prepared, decoded, 4'000'044, 1));
}
BENCHMARK(BM_ErrorReport)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace wavimg

BENCHMARK_MAIN();
