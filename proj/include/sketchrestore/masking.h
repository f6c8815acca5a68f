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


#ifndef SKETCHRESTORE_MASKING_H_
#define SKETCHRESTORE_MASKING_H_

#include <cstddef>
#include <string>

#include "sketchrestore/raster.h"

namespace sketchrestore {

enum class ChannelRule { kLuma, kMaxChannel, kMinChannel };

const char* ChannelRuleName(ChannelRule rule);
// Accepts "luma", "max", "min" and the long forms "max-channel", "min-channel".
ChannelRule ParseChannelRule(const std::string& name);

struct ThresholdSpec {
  int threshold = 0;
  ChannelRule rule = ChannelRule::kLuma;

  void Validate() const;

  friend bool operator==(const ThresholdSpec&, const ThresholdSpec&) = default;
};

// A pixel is masked when its darkness statistic is strictly below the
// threshold. Luma uses Rec.601 weights and is evaluated in exact integer
// arithmetic (299R + 587G + 114B < 1000T).
bool IsBelowThreshold(const Rgb& px, const ThresholdSpec& spec);

Mask BuildMask(const Raster& raster, const ThresholdSpec& spec);

// Paints masked pixels white; everything else is copied through.
Raster Whiteout(const Raster& raster, const Mask& mask);

struct MaskStats {
  size_t masked_count = 0;
  double fraction = 0.0;
};

MaskStats ComputeMaskStats(const Mask& mask);

}  // namespace sketchrestore

#endif  // SKETCHRESTORE_MASKING_H_
