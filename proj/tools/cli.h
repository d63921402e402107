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

// The wavimg command line: gen, encode, decode, analyze, roundtrip.
//
// Each subcommand is also callable directly with a config struct so tests
// can drive it without spawning a process.

#ifndef WAVIMG_TOOLS_CLI_H_
#define WAVIMG_TOOLS_CLI_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wavimg/error.h"
#include "wavimg/raster_codec.h"
#include "wavimg/signal_prep.h"
#include "wavimg/synth.h"

namespace wavimg::cli {

namespace fs = std::filesystem;

enum ExitStatus : int {
  kExitOk = 0,
  kExitFailure = 1,  // uncategorized (should not happen)
  kExitUsage = 2,
  kExitInput = 3,
  kExitConsistency = 4,
  kExitIo = 5,
};

int exit_status_for(ErrorCode code);

struct EncodeConfig {
  fs::path input;
  fs::path output;
  std::optional<ImageFormat> format;  // inferred from `output` when unset
  PrepMode mode = PrepMode::kPositiveOnly;
  std::optional<int> bits;  // 16 for PNG/TIFF, 8 for JPEG when unset
  std::size_t cols_hint = 2000;
  std::optional<std::size_t> rows;  // with `cols_hint`, fixes the shape
  std::optional<std::size_t> take;
  int jpeg_quality = kDefaultJpegQuality;
  std::optional<fs::path> manifest;       // default: output + ".manifest"
  std::optional<fs::path> reference_wav;  // the audio decode should reproduce
  bool force = false;
};

struct DecodeConfig {
  fs::path image;
  fs::path output;
  std::optional<fs::path> manifest;
  std::optional<ImageFormat> format;
  bool force = false;
};

struct AnalyzeConfig {
  fs::path original;
  fs::path decoded;
  std::optional<fs::path> image;  // size used as encoded_bytes when given
  std::optional<fs::path> csv;
  std::string label = "decoded";
  bool force = false;
};

struct RoundtripConfig {
  fs::path input;
  std::vector<ImageFormat> formats = {ImageFormat::kPng, ImageFormat::kTiff, ImageFormat::kJpeg};
  PrepMode mode = PrepMode::kPositiveOnly;
  std::optional<int> bits;  // applies to PNG/TIFF; JPEG is always 8
  std::size_t cols_hint = 2000;
  std::optional<std::size_t> take;
  int jpeg_quality = kDefaultJpegQuality;
  std::optional<fs::path> csv_dir;
  bool force = false;
};

struct GenConfig {
  fs::path output;
  SynthKind kind = SynthKind::kNoiseBursts;
  double seconds = 60.0;
  std::uint32_t rate = 44100;
  std::uint64_t seed = 1;
  double frequency_hz = 440.0;
  bool force = false;
};

int run_encode(const EncodeConfig& cfg, std::ostream& out, std::ostream& err);
int run_decode(const DecodeConfig& cfg, std::ostream& out, std::ostream& err);
int run_analyze(const AnalyzeConfig& cfg, std::ostream& out, std::ostream& err);
int run_roundtrip(const RoundtripConfig& cfg, std::ostream& out, std::ostream& err);
int run_gen(const GenConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// File helpers, exposed for tests. Both throw Error(kIo).
std::vector<std::uint8_t> read_file(const fs::path& path);
/// Refuses to replace an existing file unless `force` is set.
void write_file(const fs::path& path, std::span<const std::uint8_t> bytes, bool force);

/// Format from the extension: .png, .tif/.tiff, .jpg/.jpeg.
ImageFormat format_from_path(const fs::path& path);

}  // namespace wavimg::cli

#endif  // WAVIMG_TOOLS_CLI_H_
