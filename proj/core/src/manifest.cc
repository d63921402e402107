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

#include "wavimg/manifest.h"

#include <array>
#include <charconv>
#include <limits>

#include "wavimg/error.h"

namespace wavimg {
namespace {

constexpr std::array<std::string_view, 7> kKeys = {
    "rows", "cols", "bits", "mode", "sample_rate", "meaningful_count", "source_total_samples"};

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedManifest, what);
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view text) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    malformed("value of '" + std::string(key) + "' is not an unsigned decimal integer: '" +
              std::string(text) + "'");
  }
  return value;
}

}  // namespace

void Manifest::validate() const {
  if (rows == 0 || cols == 0) malformed("rows and cols must be at least 1");
  if (sample_rate == 0) malformed("sample_rate must be at least 1");
  if (sample_rate > std::numeric_limits<std::uint32_t>::max()) malformed("sample_rate too large");
  if (bits != 8 && bits != 16) malformed("bits must be 8 or 16, got " + std::to_string(bits));
  if (rows > std::numeric_limits<std::uint64_t>::max() / cols) malformed("rows * cols overflows");
  if (meaningful_count > rows * cols) {
    malformed("meaningful_count " + std::to_string(meaningful_count) + " exceeds rows * cols");
  }
}

std::string write_manifest(const Manifest& m) {
  m.validate();
  std::string out(kManifestMagic);
  out += '\n';
  const auto line = [&out](std::string_view key, const std::string& value) {
    out.append(key).append("=").append(value).append("\n");
  };
  line("rows", std::to_string(m.rows));
  line("cols", std::to_string(m.cols));
  line("bits", std::to_string(m.bits));
  line("mode", std::string(to_string(m.mode)));
  line("sample_rate", std::to_string(m.sample_rate));
  line("meaningful_count", std::to_string(m.meaningful_count));
  line("source_total_samples", std::to_string(m.source_total_samples));
  return out;
}

Manifest read_manifest(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start <= text.size();) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      // Text after the last newline; empty when the file ends with "\n".
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  if (lines.empty() || lines.front() != kManifestMagic) {
    malformed("first line must be '" + std::string(kManifestMagic) + "'");
  }

  Manifest m;
  std::array<bool, kKeys.size()> seen{};
  std::size_t next = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) malformed("line " + std::to_string(i + 1) + " has no '='");
    const std::string_view key = line.substr(0, eq);
    const std::string_view value = line.substr(eq + 1);

    std::size_t slot = kKeys.size();
    for (std::size_t k = 0; k < kKeys.size(); ++k) {
      if (kKeys[k] == key) slot = k;
    }
    if (slot == kKeys.size()) malformed("unknown key '" + std::string(key) + "'");
    if (seen[slot]) malformed("duplicate key '" + std::string(key) + "'");
    if (slot != next) malformed("missing key '" + std::string(kKeys[next]) + "'");
    seen[slot] = true;
    ++next;

    switch (slot) {
      case 0:
        m.rows = parse_unsigned(key, value);
        break;
      case 1:
        m.cols = parse_unsigned(key, value);
        break;
      case 2: {
        const std::uint64_t bits = parse_unsigned(key, value);
        if (bits != 8 && bits != 16) malformed("bits must be 8 or 16");
        m.bits = static_cast<int>(bits);
        break;
      }
      case 3:
        if (value == "positive") {
          m.mode = PrepMode::kPositiveOnly;
        } else if (value == "offset") {
          m.mode = PrepMode::kOffsetFull;
        } else {
          malformed("mode must be 'positive' or 'offset', got '" + std::string(value) + "'");
        }
        break;
      case 4:
        m.sample_rate = parse_unsigned(key, value);
        break;
      case 5:
        m.meaningful_count = parse_unsigned(key, value);
        break;
      case 6:
        m.source_total_samples = parse_unsigned(key, value);
        break;
    }
  }
  if (next != kKeys.size()) malformed("missing key '" + std::string(kKeys[next]) + "'");
  m.validate();
  return m;
}

Manifest read_manifest(std::span<const std::uint8_t> bytes) {
  return read_manifest(
      std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

}  // namespace wavimg
