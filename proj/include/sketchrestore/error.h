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


#ifndef SKETCHRESTORE_ERROR_H_
#define SKETCHRESTORE_ERROR_H_

#include <stdexcept>
#include <string>

namespace sketchrestore {

enum class ErrorCode {
  kNotFound,
  kUnsupportedFormat,
  kCorruptFile,
  kIoError,
  kDimensionMismatch,
  kInvalidArgument,
  kInvalidLevels,
  kAlphaOutOfRange,
  kEmptyRegion,
  kDegenerateLandmarks,
  kInvalidSpec,
  kBadConfig,
  kInternal,
};

const char* ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above; the
// C API maps them one-to-one onto srst_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sketchrestore

#endif  // SKETCHRESTORE_ERROR_H_
