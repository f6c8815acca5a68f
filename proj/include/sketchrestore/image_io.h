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


#ifndef SKETCHRESTORE_IMAGE_IO_H_
#define SKETCHRESTORE_IMAGE_IO_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "sketchrestore/raster.h"

namespace sketchrestore {

// Reads an 8-bit PNG (any color type; gray and palette are expanded to RGB,
// alpha is dropped) or a binary PPM (P6, maxval 255). The format is detected
// from the file signature, not the extension. 16-bit inputs are rejected
// with kUnsupportedFormat. Non-fatal notices (e.g. a dropped alpha channel)
// are appended to `warnings`, or printed to stderr when it is null.
Raster LoadImage(const std::filesystem::path& path,
                 std::vector<std::string>* warnings = nullptr);

// Writes P6 when the extension is .ppm or .pnm (case-insensitive), PNG
// otherwise. Both encodings are lossless.
void SaveImage(const Raster& raster, const std::filesystem::path& path);

Raster DecodePpm(std::span<const uint8_t> bytes);
std::vector<uint8_t> EncodePpm(const Raster& raster);
Raster DecodePng(std::span<const uint8_t> bytes,
                 std::vector<std::string>* warnings = nullptr);
std::vector<uint8_t> EncodePng(const Raster& raster);

// Masks travel as 1-bit grayscale PNG with masked pixels black. On import,
// any image is accepted and a pixel is masked when its mean channel value
// is below 128.
void SaveMask(const Mask& mask, const std::filesystem::path& path);
Mask LoadMask(const std::filesystem::path& path);

// 8-bit grayscale preview of a signed plane: value + 128, rounded, clamped.
void SavePlanePreview(const PlaneF& plane, const std::filesystem::path& path);

bool HasPpmExtension(const std::filesystem::path& path);

}  // namespace sketchrestore

#endif  // SKETCHRESTORE_IMAGE_IO_H_
