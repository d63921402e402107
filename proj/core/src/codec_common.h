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

#ifndef WAVIMG_SRC_CODEC_COMMON_H_
#define WAVIMG_SRC_CODEC_COMMON_H_

#include <cstdint>
#include <string>

#include "wavimg/error.h"

namespace wavimg::detail {

// Upper bound on width * height accepted from a container header, so a
// hostile header cannot force a huge allocation before the payload is read.
inline constexpr std::uint64_t kMaxDecodedPixels = std::uint64_t{1} << 28;

inline void check_decoded_dimensions(std::uint64_t width, std::uint64_t height,
                                     const char* container) {
  if (width == 0 || height == 0) {
    throw Error(ErrorCode::kMalformedImage, std::string(container) + " header has a zero dimension");
  }
  if (width > kMaxDecodedPixels || height > kMaxDecodedPixels / width) {
    throw Error(ErrorCode::kUnsupportedImage,
                std::string(container) + " image of " + std::to_string(width) + "x" +
                    std::to_string(height) + " pixels exceeds the decoder limit");
  }
}

}  // namespace wavimg::detail

#endif  // WAVIMG_SRC_CODEC_COMMON_H_
