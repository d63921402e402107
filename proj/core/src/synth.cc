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

#include "wavimg/synth.h"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "wavimg/error.h"

namespace wavimg {
namespace {

// Hit spacing and gate length, in seconds.
constexpr double kMinSpacing = 0.25;
constexpr double kMaxSpacing = 0.50;
constexpr double kMinGate = 0.08;
constexpr double kMaxGate = 0.12;
constexpr double kMinPeak = 0.5;
constexpr double kMaxPeak = 0.9;

class UnitRandom {
 public:
  explicit UnitRandom(std::uint64_t seed) : engine_(seed) {}
  // Uniform on [0, 1) with 53 random bits.
  double operator()() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double between(double lo, double hi) { return lo + (hi - lo) * (*this)(); }

 private:
  std::mt19937_64 engine_;
};

void add_noise_bursts(std::vector<double>& out, std::uint32_t rate, std::uint64_t seed, double gain) {
  UnitRandom rng(seed);
  const std::size_t n = out.size();
  std::size_t start = 0;
  while (start < n) {
    const auto spacing = static_cast<std::size_t>(rate * rng.between(kMinSpacing, kMaxSpacing)) + 1;
    const auto gate = static_cast<std::size_t>(rate * rng.between(kMinGate, kMaxGate)) + 1;
    const double peak = gain * rng.between(kMinPeak, kMaxPeak);
    const double tau = static_cast<double>(gate) / 5.0;
    for (std::size_t i = 0; i < gate && start + i < n; ++i) {
      const double envelope = peak * std::exp(-static_cast<double>(i) / tau);
      out[start + i] += envelope * (2.0 * rng() - 1.0);
    }
    start += spacing;
  }
}

void add_sine(std::vector<double>& out, std::uint32_t rate, double frequency, double amplitude) {
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] += amplitude * std::sin(2.0 * std::numbers::pi * frequency * static_cast<double>(k) / rate);
  }
}

}  // namespace

std::string_view to_string(SynthKind kind) {
  switch (kind) {
    case SynthKind::kNoiseBursts:
      return "noise-bursts";
    case SynthKind::kSine:
      return "sine";
    case SynthKind::kMixed:
      return "mixed";
  }
  return "?";
}

SynthKind parse_synth_kind(std::string_view text) {
  if (text == "noise-bursts") return SynthKind::kNoiseBursts;
  if (text == "sine") return SynthKind::kSine;
  if (text == "mixed") return SynthKind::kMixed;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown signal kind '" + std::string(text) + "' (expected noise-bursts, sine or mixed)");
}

AudioSignal synthesize(const SynthOptions& options) {
  if (options.sample_rate == 0) throw Error(ErrorCode::kInvalidArgument, "sample rate must be positive");
  if (!(options.frequency_hz > 0.0)) throw Error(ErrorCode::kInvalidArgument, "frequency must be positive");

  AudioSignal signal;
  signal.sample_rate = options.sample_rate;
  signal.source_bits = 16;
  signal.channels_in_source = 1;
  signal.samples.assign(options.sample_count, 0.0);
  switch (options.kind) {
    case SynthKind::kNoiseBursts:
      add_noise_bursts(signal.samples, options.sample_rate, options.seed, 1.0);
      break;
    case SynthKind::kSine:
      add_sine(signal.samples, options.sample_rate, options.frequency_hz, kSineAmplitude);
      break;
    case SynthKind::kMixed:
      add_sine(signal.samples, options.sample_rate, options.frequency_hz, 0.35);
      add_noise_bursts(signal.samples, options.sample_rate, options.seed, 0.6);
      break;
  }
  return signal;
}

std::size_t samples_for_duration(double seconds, std::uint32_t sample_rate) {
  if (!(seconds > 0.0) || !std::isfinite(seconds)) {
    throw Error(ErrorCode::kInvalidArgument, "duration must be a positive number of seconds");
  }
  if (sample_rate == 0) throw Error(ErrorCode::kInvalidArgument, "sample rate must be positive");
  return static_cast<std::size_t>(std::llround(seconds * sample_rate));
}

}  // namespace wavimg
