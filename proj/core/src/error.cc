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

#include "wavimg/error.h"

namespace wavimg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedRiff:
      return "MalformedRiff";
    case ErrorCode::kUnsupportedFormat:
      return "UnsupportedFormat";
    case ErrorCode::kShapeMismatch:
      return "ShapeMismatch";
    case ErrorCode::kValueOutOfRange:
      return "ValueOutOfRange";
    case ErrorCode::kUnsupportedDepth:
      return "UnsupportedDepth";
    case ErrorCode::kMalformedImage:
      return "MalformedImage";
    case ErrorCode::kUnsupportedImage:
      return "UnsupportedImage";
    case ErrorCode::kMalformedManifest:
      return "MalformedManifest";
    case ErrorCode::kGeometryMismatch:
      return "GeometryMismatch";
    case ErrorCode::kLengthMismatch:
      return "LengthMismatch";
    case ErrorCode::kEmptyInput:
      return "EmptyInput";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kIo:
      return "IoError";
  }
  return "Unknown";
}

}  // namespace wavimg
