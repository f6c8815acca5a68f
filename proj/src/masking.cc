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


#include "sketchrestore/masking.h"

#include <algorithm>

#include "sketchrestore/error.h"

namespace sketchrestore {

const char* ChannelRuleName(ChannelRule rule) {
  switch (rule) {
    case ChannelRule::kLuma: return "luma";
    case ChannelRule::kMaxChannel: return "max";
    case ChannelRule::kMinChannel: return "min";
  }
  return "luma";
}

ChannelRule ParseChannelRule(const std::string& name) {
  if (name == "luma") return ChannelRule::kLuma;
  if (name == "max" || name == "max-channel") return ChannelRule::kMaxChannel;
  if (name == "min" || name == "min-channel") return ChannelRule::kMinChannel;
  throw Error(ErrorCode::kInvalidArgument, "unknown channel rule '" + name + "'");
}

void ThresholdSpec::Validate() const {
  if (threshold < 0 || threshold > 255) {
    throw Error(ErrorCode::kInvalidArgument,
                "threshold must be in [0,255], got " + std::to_string(threshold));
  }
}

bool IsBelowThreshold(const Rgb& px, const ThresholdSpec& spec) {
  switch (spec.rule) {
    case ChannelRule::kLuma:
      return 299 * int{px.r} + 587 * int{px.g} + 114 * int{px.b} < 1000 * spec.threshold;
    case ChannelRule::kMaxChannel:
      return std::max({px.r, px.g, px.b}) < spec.threshold;
    case ChannelRule::kMinChannel:
      return std::min({px.r, px.g, px.b}) < spec.threshold;
  }
  return false;
}

Mask BuildMask(const Raster& raster, const ThresholdSpec& spec) {
  spec.Validate();
  Mask mask(raster.width(), raster.height());
  for (size_t i = 0; i < raster.size(); ++i) mask.set(i, IsBelowThreshold(raster[i], spec));
  return mask;
}

Raster Whiteout(const Raster& raster, const Mask& mask) {
  if (!mask.Matches(raster)) {
    throw Error(ErrorCode::kDimensionMismatch, "mask and image sizes differ");
  }
  Raster out = raster;
  for (size_t i = 0; i < out.size(); ++i) {
    if (mask[i]) out[i] = kWhite;
  }
  return out;
}

MaskStats ComputeMaskStats(const Mask& mask) {
  MaskStats stats;
  stats.masked_count = mask.Count();
  stats.fraction = static_cast<double>(stats.masked_count) / static_cast<double>(mask.size());
  return stats;
}

}  // namespace sketchrestore
