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

#include "wavimg/signal_prep.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wavimg/error.h"

namespace wavimg {
namespace {

// Largest double below 1.0; decoded audio must stay inside [-1, 1).
constexpr double kTop = 1.0 - std::numeric_limits<double>::epsilon() / 2;

std::string shape_text(GridShape shape) {
  return std::to_string(shape.rows) + "x" + std::to_string(shape.cols);
}

void check_shape(GridShape shape) {
  if (shape.rows == 0 || shape.cols == 0) {
    throw Error(ErrorCode::kShapeMismatch, "grid shape " + shape_text(shape) + " has an empty side");
  }
  if (shape.rows > std::numeric_limits<std::size_t>::max() / shape.cols) {
    throw Error(ErrorCode::kShapeMismatch, "grid shape " + shape_text(shape) + " overflows");
  }
}

}  // namespace

std::string_view to_string(PrepMode mode) {
  return mode == PrepMode::kPositiveOnly ? "positive" : "offset";
}

PrepMode parse_prep_mode(std::string_view text) {
  if (text == "positive") return PrepMode::kPositiveOnly;
  if (text == "offset") return PrepMode::kOffsetFull;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown mode '" + std::string(text) + "' (expected positive or offset)");
}

SampleGrid::SampleGrid(GridShape shape, std::vector<double> values, std::size_t meaningful_count)
    : shape_(shape), values_(std::move(values)), meaningful_count_(meaningful_count) {
  check_shape(shape_);
  if (values_.size() != shape_.cells()) {
    throw Error(ErrorCode::kShapeMismatch,
                std::to_string(values_.size()) + " values do not fill a " + shape_text(shape_) + " grid");
  }
  if (meaningful_count_ > values_.size()) {
    throw Error(ErrorCode::kShapeMismatch, "meaningful count " + std::to_string(meaningful_count_) +
                                               " exceeds grid size " + std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    // Negated comparison so NaN is rejected too.
    if (!(values_[i] >= 0.0 && values_[i] <= 1.0)) {
      throw Error(ErrorCode::kValueOutOfRange,
                  "grid value " + std::to_string(values_[i]) + " at index " + std::to_string(i) +
                      " is outside [0, 1]");
    }
  }
}

std::vector<double> filter_positive(const AudioSignal& signal) {
  std::vector<double> out;
  std::copy_if(signal.samples.begin(), signal.samples.end(), std::back_inserter(out),
               [](double v) { return v >= 0.0; });
  return out;
}

std::vector<double> apply_mode(const AudioSignal& signal, PrepMode mode) {
  if (mode == PrepMode::kPositiveOnly) return filter_positive(signal);
  std::vector<double> out(signal.samples.size());
  std::transform(signal.samples.begin(), signal.samples.end(), out.begin(),
                 [](double x) { return (x + 1.0) / 2.0; });
  return out;
}

std::vector<double> invert_mode(std::span<const double> prepared, PrepMode mode) {
  std::vector<double> out(prepared.size());
  std::transform(prepared.begin(), prepared.end(), out.begin(), [mode](double v) {
    const double x = mode == PrepMode::kOffsetFull ? 2.0 * v - 1.0 : v;
    return std::clamp(x, -1.0, kTop);
  });
  return out;
}

std::vector<double> take_first(std::vector<double> values, std::optional<std::size_t> count) {
  if (count && *count < values.size()) values.resize(*count);
  return values;
}

SampleGrid reshape_to_grid(std::span<const double> values, GridShape shape, bool pad) {
  check_shape(shape);
  const std::size_t cells = shape.cells();
  if (values.size() > cells || (!pad && values.size() != cells)) {
    throw Error(ErrorCode::kShapeMismatch,
                std::to_string(values.size()) + " values cannot be placed in a " + shape_text(shape) +
                    " grid" + (pad ? "" : " without padding"));
  }
  std::vector<double> cellsv(cells, 0.0);
  std::copy(values.begin(), values.end(), cellsv.begin());
  return SampleGrid(shape, std::move(cellsv), values.size());
}

std::vector<double> flatten_grid(const SampleGrid& grid) {
  const auto v = grid.values().first(grid.meaningful_count());
  return {v.begin(), v.end()};
}

GridShape default_shape(std::size_t n, std::size_t cols_hint) {
  if (cols_hint == 0) throw Error(ErrorCode::kInvalidArgument, "column count must be at least 1");
  const std::size_t rows = n / cols_hint + (n % cols_hint != 0 ? 1 : 0);
  return {std::max<std::size_t>(1, rows), cols_hint};
}

}  // namespace wavimg
