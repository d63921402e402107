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

// Turning a 1-D sample stream into a row-major grid of unit-interval values
// and back.

#ifndef WAVIMG_SIGNAL_PREP_H_
#define WAVIMG_SIGNAL_PREP_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wavimg/wav_io.h"

namespace wavimg {

/// How signed audio is mapped into [0, 1].
enum class PrepMode {
  /// Keep only samples >= 0. Negative half-waves are discarded, so the
  /// original audio cannot be reconstructed.
  kPositiveOnly,
  /// x -> (x + 1) / 2 over every sample. Invertible.
  kOffsetFull,
};

std::string_view to_string(PrepMode mode);
/// Accepts "positive" and "offset". Throws Error(kInvalidArgument) otherwise.
PrepMode parse_prep_mode(std::string_view text);

struct GridShape {
  std::size_t rows = 1;
  std::size_t cols = 1;

  std::size_t cells() const { return rows * cols; }
  bool operator==(const GridShape&) const = default;
};

/// Row-major grid of values in [0, 1]. Cells past `meaningful_count` are
/// padding and carry no data.
class SampleGrid {
 public:
  /// Throws Error(kShapeMismatch) if the sizes disagree and
  /// Error(kValueOutOfRange) for values outside [0, 1] (NaN included).
  SampleGrid(GridShape shape, std::vector<double> values, std::size_t meaningful_count);

  std::size_t rows() const { return shape_.rows; }
  std::size_t cols() const { return shape_.cols; }
  GridShape shape() const { return shape_; }
  std::size_t meaningful_count() const { return meaningful_count_; }
  std::span<const double> values() const { return values_; }

  double at(std::size_t row, std::size_t col) const { return values_[row * shape_.cols + col]; }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(values_).subspan(r * shape_.cols, shape_.cols);
  }

 private:
  GridShape shape_;
  std::vector<double> values_;
  std::size_t meaningful_count_;
};

std::vector<double> filter_positive(const AudioSignal& signal);

std::vector<double> apply_mode(const AudioSignal& signal, PrepMode mode);

/// Maps prepared values back to audio amplitudes. PositiveOnly is the
/// identity; OffsetFull applies v -> 2v - 1. Results are clamped to [-1, 1).
std::vector<double> invert_mode(std::span<const double> prepared, PrepMode mode);

/// First `count` values, or all of them if fewer are available.
std::vector<double> take_first(std::vector<double> values, std::optional<std::size_t> count);

/// grid[i][j] = values[i * cols + j]. With `pad`, short inputs are filled
/// with trailing zeros; otherwise the length must be exactly rows * cols.
SampleGrid reshape_to_grid(std::span<const double> values, GridShape shape, bool pad);

/// The first meaningful_count values in row-major order.
std::vector<double> flatten_grid(const SampleGrid& grid);

/// Fixed column count, enough rows to hold `n` values (at least one row).
GridShape default_shape(std::size_t n, std::size_t cols_hint);

}  // namespace wavimg

#endif  // WAVIMG_SIGNAL_PREP_H_
