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

// Reconstruction error (original - decoded) and size comparisons.

#ifndef WAVIMG_ANALYSIS_H_
#define WAVIMG_ANALYSIS_H_

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace wavimg {

struct ErrorStats {
  double min = 0.0;
  double max = 0.0;
  double rmse = 0.0;
  double max_abs = 0.0;
};

struct ErrorReport {
  std::string codec_label;
  double error_min = 0.0;
  double error_max = 0.0;
  double rmse = 0.0;
  double max_abs_error = 0.0;
  std::size_t compared_samples = 0;
  std::uint64_t original_bytes = 0;
  std::uint64_t encoded_bytes = 0;
  double compression_ratio = 0.0;
};

/// errors[i] = original[i] - decoded[i]. Throws Error(kLengthMismatch).
std::vector<double> compute_error(std::span<const double> original, std::span<const double> decoded);

/// Throws Error(kEmptyInput) for an empty sequence.
ErrorStats summarize(std::span<const double> errors);

/// Throws Error(kLengthMismatch), Error(kEmptyInput), or
/// Error(kInvalidArgument) when a byte count is zero.
ErrorReport build_report(std::string label, std::span<const double> original,
                         std::span<const double> decoded, std::uint64_t original_bytes,
                         std::uint64_t encoded_bytes);

/// "index,error" header, then one row per element with enough digits to
/// read the exact double back. Throws Error(kIo) if the stream fails.
void emit_csv(std::span<const double> errors, std::ostream& out);

/// Fixed-width table, one row per report, columns: label, error_min,
/// error_max, rmse, max_abs, original_bytes, encoded_bytes, ratio.
void render_report_table(std::span<const ErrorReport> reports, std::ostream& out);

}  // namespace wavimg

#endif  // WAVIMG_ANALYSIS_H_
