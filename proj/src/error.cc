// Copyright 2026 The sketchrestore Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "sketchrestore/error.h"

namespace sketchrestore {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kUnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::kCorruptFile: return "CorruptFile";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidLevels: return "InvalidLevels";
    case ErrorCode::kAlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::kEmptyRegion: return "EmptyRegion";
    case ErrorCode::kDegenerateLandmarks: return "DegenerateLandmarks";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kBadConfig: return "BadConfig";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace sketchrestore
