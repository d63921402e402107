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

#ifndef WAVIMG_ERROR_H_
#define WAVIMG_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace wavimg {

enum class ErrorCode {
  kMalformedRiff,
  kUnsupportedFormat,
  kShapeMismatch,
  kValueOutOfRange,
  kUnsupportedDepth,
  kMalformedImage,
  kUnsupportedImage,
  kMalformedManifest,
  kGeometryMismatch,
  kLengthMismatch,
  kEmptyInput,
  kInvalidArgument,
  kIo,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& message() const noexcept { return message_; }

  /// Same code, message prefixed with "<context>: ".
  Error with_context(std::string_view context) const {
    return Error(code_, std::string(context) + ": " + message_);
  }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace wavimg

#endif  // WAVIMG_ERROR_H_
