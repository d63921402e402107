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

#include "cli.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "wavimg/analysis.h"
#include "wavimg/manifest.h"
#include "wavimg/pipeline.h"
#include "wavimg/wav_io.h"

namespace wavimg::cli {
namespace {

// Runs `fn`, tagging any library error with the pipeline stage it came from.
template <typename Fn>
auto stage(std::string_view name, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw e.with_context(name);
  }
}

template <typename Fn>
int guarded(std::string_view command, std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "wavimg " << command << ": " << e.what() << "\n";
    return exit_status_for(e.code());
  } catch (const std::exception& e) {
    err << "wavimg " << command << ": " << e.what() << "\n";
    return kExitFailure;
  }
}

void ensure_writable(const fs::path& path, bool force) {
  std::error_code ec;
  if (!force && fs::exists(path, ec)) {
    throw Error(ErrorCode::kIo, "'" + path.string() + "' already exists (use --force to overwrite)");
  }
}

fs::path default_manifest_path(const fs::path& image) {
  fs::path p = image;
  p += ".manifest";
  return p;
}

std::string format_label(ImageFormat format, int bits) {
  return std::string(to_string(format)) + "/" + std::to_string(bits);
}

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::uint64_t wav_size_for(std::size_t samples) {
  const std::uint64_t data = static_cast<std::uint64_t>(samples) * 2;
  return kCanonicalWavHeaderBytes + data;
}

}  // namespace

int exit_status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kUnsupportedDepth:
    case ErrorCode::kShapeMismatch:
      return kExitUsage;
    case ErrorCode::kMalformedRiff:
    case ErrorCode::kUnsupportedFormat:
    case ErrorCode::kMalformedImage:
    case ErrorCode::kUnsupportedImage:
    case ErrorCode::kMalformedManifest:
    case ErrorCode::kValueOutOfRange:
    case ErrorCode::kEmptyInput:
      return kExitInput;
    case ErrorCode::kGeometryMismatch:
    case ErrorCode::kLengthMismatch:
      return kExitConsistency;
    case ErrorCode::kIo:
      return kExitIo;
  }
  return kExitFailure;
}

std::vector<std::uint8_t> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "' for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::kIo, "failed reading '" + path.string() + "'");
  return bytes;
}

void write_file(const fs::path& path, std::span<const std::uint8_t> bytes, bool force) {
  ensure_writable(path, force);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw Error(ErrorCode::kIo, "failed writing '" + path.string() + "'");
}

ImageFormat format_from_path(const fs::path& path) {
  const std::string ext = path.extension().string();
  if (ext.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot infer image format from '" + path.string() + "'; pass --format");
  }
  return parse_image_format(ext.substr(1));
}

int run_gen(const GenConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded("gen", err, [&] {
    ensure_writable(cfg.output, cfg.force);
    SynthOptions options;
    options.kind = cfg.kind;
    options.sample_rate = cfg.rate;
    options.seed = cfg.seed;
    options.frequency_hz = cfg.frequency_hz;
    options.sample_count = stage("config", [&] { return samples_for_duration(cfg.seconds, cfg.rate); });
    const AudioSignal signal = stage("synthesize", [&] { return synthesize(options); });
    const auto bytes = write_wav(signal, 16);
    write_file(cfg.output, bytes, cfg.force);

    const AudioSignal written = parse_wav(bytes);
    const auto nonnegative = std::count_if(written.samples.begin(), written.samples.end(),
                                           [](double v) { return v >= 0.0; });
    out << "wrote " << cfg.output.string() << ": " << to_string(cfg.kind) << ", "
        << written.samples.size() << " samples at " << cfg.rate << " Hz, seed " << cfg.seed << "\n"
        << "  nonnegative samples: " << nonnegative << "\n"
        << "  bytes: " << bytes.size() << "\n";
    return kExitOk;
  });
}

int run_encode(const EncodeConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded("encode", err, [&] {
    EncodeOptions options;
    options.mode = cfg.mode;
    options.cols_hint = cfg.cols_hint;
    options.take = cfg.take;
    stage("config", [&] {
      options.codec.format = cfg.format ? *cfg.format : format_from_path(cfg.output);
      options.codec.bits = cfg.bits.value_or(default_bits(options.codec.format));
      options.codec.jpeg_quality = cfg.jpeg_quality;
      options.codec.validate();
      if (cfg.take && *cfg.take == 0) throw Error(ErrorCode::kInvalidArgument, "--take must be at least 1");
      if (cfg.cols_hint == 0) throw Error(ErrorCode::kInvalidArgument, "--cols must be at least 1");
      if (cfg.rows) {
        if (*cfg.rows == 0) throw Error(ErrorCode::kInvalidArgument, "--rows must be at least 1");
        options.shape = GridShape{*cfg.rows, cfg.cols_hint};
      }
    });
    const fs::path manifest_path = cfg.manifest.value_or(default_manifest_path(cfg.output));
    ensure_writable(cfg.output, cfg.force);
    ensure_writable(manifest_path, cfg.force);
    if (cfg.reference_wav) ensure_writable(*cfg.reference_wav, cfg.force);

    const auto wav_bytes = stage("read input", [&] { return read_file(cfg.input); });
    const AudioSignal signal = stage("parse input", [&] { return parse_wav(wav_bytes); });
    const EncodedImage encoded = stage("encode", [&] { return encode_signal(signal, options); });

    const std::string manifest_text = write_manifest(encoded.manifest);
    write_file(cfg.output, encoded.image, cfg.force);
    write_file(manifest_path,
               std::span(reinterpret_cast<const std::uint8_t*>(manifest_text.data()), manifest_text.size()),
               cfg.force);
    if (cfg.reference_wav) write_file(*cfg.reference_wav, write_wav(reference_signal(encoded), 16), cfg.force);

    const auto& m = encoded.manifest;
    out << "encoded " << cfg.input.string() << " -> " << cfg.output.string() << " ("
        << format_label(options.codec.format, options.codec.bits) << ")\n"
        << "  mode: " << to_string(m.mode) << ", source samples: " << m.source_total_samples
        << ", prepared: " << m.meaningful_count << "\n"
        << "  grid: " << m.rows << "x" << m.cols << ", padding: " << m.rows * m.cols - m.meaningful_count
        << "\n"
        << "  image bytes: " << encoded.image.size() << ", wav bytes: " << wav_size_for(m.meaningful_count)
        << "\n"
        << "  manifest: " << manifest_path.string() << "\n";
    return kExitOk;
  });
}

int run_decode(const DecodeConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded("decode", err, [&] {
    const ImageFormat format =
        stage("config", [&] { return cfg.format ? *cfg.format : format_from_path(cfg.image); });
    const fs::path manifest_path = cfg.manifest.value_or(default_manifest_path(cfg.image));
    ensure_writable(cfg.output, cfg.force);

    const auto manifest_bytes = stage("read manifest", [&] { return read_file(manifest_path); });
    const Manifest manifest = stage("parse manifest", [&] { return read_manifest(manifest_bytes); });
    const auto image_bytes = stage("read image", [&] { return read_file(cfg.image); });
    const AudioSignal signal =
        stage("decode image", [&] { return decode_signal(image_bytes, format, manifest); });
    const auto wav = write_wav(signal, 16);
    write_file(cfg.output, wav, cfg.force);

    out << "decoded " << cfg.image.string() << " -> " << cfg.output.string() << "\n"
        << "  grid: " << manifest.rows << "x" << manifest.cols << " (" << manifest.bits
        << "-bit), mode: " << to_string(manifest.mode) << "\n"
        << "  samples: " << signal.samples.size() << " at " << signal.sample_rate << " Hz\n";
    return kExitOk;
  });
}

int run_analyze(const AnalyzeConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded("analyze", err, [&] {
    if (cfg.csv) ensure_writable(*cfg.csv, cfg.force);
    const auto original_bytes = stage("read original", [&] { return read_file(cfg.original); });
    const auto decoded_bytes = stage("read decoded", [&] { return read_file(cfg.decoded); });
    const AudioSignal original = stage("parse original", [&] { return parse_wav(original_bytes); });
    const AudioSignal decoded = stage("parse decoded", [&] { return parse_wav(decoded_bytes); });
    const std::uint64_t encoded_size =
        cfg.image ? stage("read image", [&] { return read_file(*cfg.image); }).size() : decoded_bytes.size();

    const ErrorReport report = stage("compare", [&] {
      return build_report(cfg.label, original.samples, decoded.samples, original_bytes.size(),
                          std::max<std::uint64_t>(encoded_size, 1));
    });
    render_report_table(std::span(&report, 1), out);
    if (cfg.csv) {
      std::ostringstream csv;
      emit_csv(compute_error(original.samples, decoded.samples), csv);
      const std::string text = csv.str();
      write_file(*cfg.csv, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()),
                 cfg.force);
    }
    return kExitOk;
  });
}

int run_roundtrip(const RoundtripConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded("roundtrip", err, [&] {
    stage("config", [&] {
      if (cfg.formats.empty()) throw Error(ErrorCode::kInvalidArgument, "no formats requested");
      if (cfg.bits && *cfg.bits != 8 && *cfg.bits != 16) {
        throw Error(ErrorCode::kUnsupportedDepth, "--bits must be 8 or 16");
      }
      if (cfg.take && *cfg.take == 0) throw Error(ErrorCode::kInvalidArgument, "--take must be at least 1");
      if (cfg.cols_hint == 0) throw Error(ErrorCode::kInvalidArgument, "--cols must be at least 1");
    });
    const auto wav_bytes = stage("read input", [&] { return read_file(cfg.input); });
    const AudioSignal signal = stage("parse input", [&] { return parse_wav(wav_bytes); });
    const std::size_t prepared = take_first(apply_mode(signal, cfg.mode), cfg.take).size();
    if (prepared == 0) {
      throw Error(ErrorCode::kEmptyInput, "no samples left to encode after mode '" +
                                              std::string(to_string(cfg.mode)) + "'");
    }
    if (cfg.csv_dir) {
      std::error_code ec;
      fs::create_directories(*cfg.csv_dir, ec);
      if (ec) throw Error(ErrorCode::kIo, "cannot create '" + cfg.csv_dir->string() + "'");
    }

    std::vector<ErrorReport> reports;
    int status = kExitOk;
    for (const ImageFormat format : cfg.formats) {
      EncodeOptions options;
      options.mode = cfg.mode;
      options.cols_hint = cfg.cols_hint;
      options.take = cfg.take;
      options.codec.format = format;
      options.codec.bits = format == ImageFormat::kJpeg ? 8 : cfg.bits.value_or(default_bits(format));
      options.codec.jpeg_quality = cfg.jpeg_quality;
      const std::string label = format_label(format, options.codec.bits);
      const int format_status = guarded("roundtrip " + label, err, [&] {
        const EncodedImage encoded = stage("encode", [&] { return encode_signal(signal, options); });
        const auto decoded = stage("decode", [&] {
          return decode_prepared(encoded.image, format, encoded.manifest);
        });
        reports.push_back(build_report(label, encoded.prepared, decoded,
                                       wav_size_for(encoded.prepared.size()), encoded.image.size()));
        if (cfg.csv_dir) {
          std::string name = lower(to_string(format)) + std::to_string(options.codec.bits) + "_error.csv";
          std::ostringstream csv;
          emit_csv(compute_error(encoded.prepared, decoded), csv);
          const std::string text = csv.str();
          write_file(*cfg.csv_dir / name,
                     std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()), cfg.force);
        }
        return kExitOk;
      });
      if (format_status != kExitOk && status == kExitOk) status = format_status;
    }
    out << "input: " << cfg.input.string() << ", mode: " << to_string(cfg.mode) << ", prepared samples: "
        << prepared << "\n";
    render_report_table(reports, out);
    return status;
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Store LPCM audio in grayscale PNG, TIFF or JPEG images and read it back.", "wavimg"};
  app.require_subcommand(1);

  const std::vector<std::string> kModes = {"positive", "offset"};
  const std::vector<std::string> kFormats = {"png", "tif", "tiff", "jpg", "jpeg"};
  const auto bits_check = CLI::IsMember({8, 16});

  GenConfig gen;
  std::string gen_kind = "noise-bursts";
  auto* gen_cmd = app.add_subcommand("gen", "Write a seeded synthetic test signal as a 16-bit WAV");
  gen_cmd->add_option("output", gen.output, "Output WAV path")->required();
  gen_cmd->add_option("--kind", gen_kind, "noise-bursts, sine or mixed")
      ->check(CLI::IsMember({"noise-bursts", "sine", "mixed"}))
      ->capture_default_str();
  gen_cmd->add_option("--seconds", gen.seconds, "Duration")->capture_default_str();
  gen_cmd->add_option("--rate", gen.rate, "Sample rate in Hz")->check(CLI::PositiveNumber)->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--freq", gen.frequency_hz, "Sine frequency in Hz")->capture_default_str();
  gen_cmd->add_flag("--force", gen.force, "Overwrite existing output");

  EncodeConfig enc;
  std::string enc_mode = "positive", enc_format, enc_manifest, enc_reference;
  int enc_bits = 0;
  std::size_t enc_rows = 0, enc_take = 0;
  auto* enc_cmd = app.add_subcommand("encode", "Encode a WAV file into an image plus manifest");
  enc_cmd->add_option("input", enc.input, "Input WAV path")->required();
  enc_cmd->add_option("output", enc.output, "Output image path (.png, .tif, .jpg)")->required();
  auto* enc_format_opt = enc_cmd->add_option("--format", enc_format, "Override the format implied by the extension")
                             ->check(CLI::IsMember(kFormats, CLI::ignore_case));
  enc_cmd->add_option("--mode", enc_mode, "positive (keep samples >= 0) or offset ((x+1)/2)")
      ->check(CLI::IsMember(kModes))
      ->capture_default_str();
  auto* enc_bits_opt = enc_cmd->add_option("--bits", enc_bits, "Pixel depth (default 16, 8 for JPEG)")->check(bits_check);
  enc_cmd->add_option("--cols", enc.cols_hint, "Grid width")->capture_default_str();
  auto* enc_rows_opt = enc_cmd->add_option("--rows", enc_rows, "Grid height (default: just enough rows)");
  auto* enc_take_opt = enc_cmd->add_option("--take", enc_take, "Keep at most this many prepared samples");
  enc_cmd->add_option("--quality", enc.jpeg_quality, "JPEG quality")->check(CLI::Range(1, 100))->capture_default_str();
  auto* enc_manifest_opt = enc_cmd->add_option("--manifest", enc_manifest, "Manifest path (default: <output>.manifest)");
  auto* enc_reference_opt =
      enc_cmd->add_option("--reference-wav", enc_reference, "Also write the audio a decode should reproduce");
  enc_cmd->add_flag("--force", enc.force, "Overwrite existing outputs");

  DecodeConfig dec;
  std::string dec_format, dec_manifest;
  auto* dec_cmd = app.add_subcommand("decode", "Decode an image plus manifest back into a WAV file");
  dec_cmd->add_option("image", dec.image, "Input image path")->required();
  dec_cmd->add_option("output", dec.output, "Output WAV path")->required();
  auto* dec_manifest_opt = dec_cmd->add_option("--manifest", dec_manifest, "Manifest path (default: <image>.manifest)");
  auto* dec_format_opt = dec_cmd->add_option("--format", dec_format, "Override the format implied by the extension")
                             ->check(CLI::IsMember(kFormats, CLI::ignore_case));
  dec_cmd->add_flag("--force", dec.force, "Overwrite existing output");

  AnalyzeConfig ana;
  std::string ana_image, ana_csv;
  auto* ana_cmd = app.add_subcommand("analyze", "Compare two WAV files sample by sample");
  ana_cmd->add_option("original", ana.original, "Reference WAV")->required();
  ana_cmd->add_option("decoded", ana.decoded, "Decoded WAV")->required();
  auto* ana_image_opt = ana_cmd->add_option("--image", ana_image, "Image whose size is reported as encoded bytes");
  auto* ana_csv_opt = ana_cmd->add_option("--csv", ana_csv, "Write index,error rows here");
  ana_cmd->add_option("--label", ana.label, "Row label")->capture_default_str();
  ana_cmd->add_flag("--force", ana.force, "Overwrite existing output");

  RoundtripConfig rt;
  std::vector<std::string> rt_formats = {"png", "tif", "jpg"};
  std::string rt_mode = "positive", rt_csv_dir;
  int rt_bits = 0;
  std::size_t rt_take = 0;
  auto* rt_cmd = app.add_subcommand("roundtrip", "Encode and decode through each format and report the error");
  rt_cmd->add_option("input", rt.input, "Input WAV path")->required();
  rt_cmd->add_option("--formats", rt_formats, "Comma-separated list of formats")
      ->delimiter(',')
      ->check(CLI::IsMember(kFormats, CLI::ignore_case))
      ->capture_default_str();
  rt_cmd->add_option("--mode", rt_mode, "positive or offset")->check(CLI::IsMember(kModes))->capture_default_str();
  auto* rt_bits_opt = rt_cmd->add_option("--bits", rt_bits, "Depth for PNG/TIFF (JPEG is always 8)")->check(bits_check);
  rt_cmd->add_option("--cols", rt.cols_hint, "Grid width")->capture_default_str();
  auto* rt_take_opt = rt_cmd->add_option("--take", rt_take, "Keep at most this many prepared samples");
  rt_cmd->add_option("--quality", rt.jpeg_quality, "JPEG quality")->check(CLI::Range(1, 100))->capture_default_str();
  auto* rt_csv_opt = rt_cmd->add_option("--csv-dir", rt_csv_dir, "Write <format><bits>_error.csv files here");
  rt_cmd->add_flag("--force", rt.force, "Overwrite existing CSV files");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (gen_cmd->parsed()) {
    gen.kind = parse_synth_kind(gen_kind);
    return run_gen(gen, out, err);
  }
  if (enc_cmd->parsed()) {
    enc.mode = parse_prep_mode(enc_mode);
    if (*enc_format_opt) enc.format = parse_image_format(enc_format);
    if (*enc_bits_opt) enc.bits = enc_bits;
    if (*enc_rows_opt) enc.rows = enc_rows;
    if (*enc_take_opt) enc.take = enc_take;
    if (*enc_manifest_opt) enc.manifest = enc_manifest;
    if (*enc_reference_opt) enc.reference_wav = enc_reference;
    return run_encode(enc, out, err);
  }
  if (dec_cmd->parsed()) {
    if (*dec_manifest_opt) dec.manifest = dec_manifest;
    if (*dec_format_opt) dec.format = parse_image_format(dec_format);
    return run_decode(dec, out, err);
  }
  if (ana_cmd->parsed()) {
    if (*ana_image_opt) ana.image = ana_image;
    if (*ana_csv_opt) ana.csv = ana_csv;
    return run_analyze(ana, out, err);
  }
  if (rt_cmd->parsed()) {
    rt.mode = parse_prep_mode(rt_mode);
    rt.formats.clear();
    for (const auto& f : rt_formats) rt.formats.push_back(parse_image_format(f));
    if (*rt_bits_opt) rt.bits = rt_bits;
    if (*rt_take_opt) rt.take = rt_take;
    if (*rt_csv_opt) rt.csv_dir = rt_csv_dir;
    return run_roundtrip(rt, out, err);
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace wavimg::cli
