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

#include "wavimg/analysis.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "wavimg/error.h"

namespace wavimg {

std::vector<double> compute_error(std::span<const double> original, std::span<const double> decoded) {
  if (original.size() != decoded.size()) {
    throw Error(ErrorCode::kLengthMismatch, "original has " + std::to_string(original.size()) +
                                                " samples, decoded has " +
                                                std::to_string(decoded.size()));
  }
  std::vector<double> errors(original.size());
  std::transform(original.begin(), original.end(), decoded.begin(), errors.begin(),
                 [](double a, double b) { return a - b; });
  return errors;
}

ErrorStats summarize(std::span<const double> errors) {
  if (errors.empty()) throw Error(ErrorCode::kEmptyInput, "no samples to summarize");
  ErrorStats s{errors[0], errors[0], 0.0, 0.0};
  double sum_squares = 0.0;
  for (const double e : errors) {
    s.min = std::min(s.min, e);
    s.max = std::max(s.max, e);
    s.max_abs = std::max(s.max_abs, std::abs(e));
    sum_squares += e * e;
  }
  // Rounding in the mean can push sqrt a few ulps past max|e|.
  s.rmse = std::min(std::sqrt(sum_squares / static_cast<double>(errors.size())), s.max_abs);
  return s;
}

ErrorReport build_report(std::string label, std::span<const double> original,
                         std::span<const double> decoded, std::uint64_t original_bytes,
                         std::uint64_t encoded_bytes) {
  if (original_bytes == 0 || encoded_bytes == 0) {
    throw Error(ErrorCode::kInvalidArgument, "byte counts must be at least 1");
  }
  const ErrorStats stats = summarize(compute_error(original, decoded));
  ErrorReport r;
  r.codec_label = std::move(label);
  r.error_min = stats.min;
  r.error_max = stats.max;
  r.rmse = stats.rmse;
  r.max_abs_error = stats.max_abs;
  r.compared_samples = original.size();
  r.original_bytes = original_bytes;
  r.encoded_bytes = encoded_bytes;
  r.compression_ratio = static_cast<double>(original_bytes) / static_cast<double>(encoded_bytes);
  return r;
}

void emit_csv(std::span<const double> errors, std::ostream& out) {
  out << "index,error\n";
  char buf[64];
  for (std::size_t i = 0; i < errors.size(); ++i) {
    // Shortest form that parses back to the identical double.
    const auto res = std::to_chars(buf, buf + sizeof(buf), errors[i]);
    out << i << ',' << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)) << '\n';
  }
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "failed writing error CSV");
}

void render_report_table(std::span<const ErrorReport> reports, std::ostream& out) {
  char line[256];
  std::snprintf(line, sizeof(line), "%-10s %13s %13s %12s %12s %14s %14s %8s\n", "label",
                "error_min", "error_max", "rmse", "max_abs", "original_bytes", "encoded_bytes",
                "ratio");
  out << line;
  for (const ErrorReport& r : reports) {
    std::snprintf(line, sizeof(line), "%-10s %13.6e %13.6e %12.5e %12.5e %14llu %14llu %8.3f\n",
                  r.codec_label.c_str(), r.error_min, r.error_max, r.rmse, r.max_abs_error,
                  static_cast<unsigned long long>(r.original_bytes),
                  static_cast<unsigned long long>(r.encoded_bytes), r.compression_ratio);
    out << line;
  }
}

}  // namespace wavimg
