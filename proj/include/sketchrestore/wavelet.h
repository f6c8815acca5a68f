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


#ifndef SKETCHRESTORE_WAVELET_H_
#define SKETCHRESTORE_WAVELET_H_

#include <string>
#include <vector>

#include "sketchrestore/raster.h"

namespace sketchrestore {

inline constexpr int kDefaultWaveletLevels = 5;
inline constexpr const char* kB3SplineKernelId = "b3-spline";

// Undecimated ("a trous") decomposition. details[0] is the finest scale.
struct WaveletStack {
  std::vector<PlaneF> details;
  PlaneF residual;
  std::string kernel_id = kB3SplineKernelId;

  int levels() const { return static_cast<int>(details.size()); }
};

struct GainVector {
  std::vector<double> gains;
  double residual_gain = 1.0;

  static GainVector Unit(int levels) {
    return GainVector{std::vector<double>(static_cast<size_t>(levels), 1.0), 1.0};
  }

  // Parses "g1,...,gJ[,residual]" for a stack of `levels` planes.
  static GainVector Parse(const std::string& text, int levels);

  void Validate(int levels) const;

  friend bool operator==(const GainVector&, const GainVector&) = default;
};

// Mirror reflection without repeating the edge sample (abcb), folded as
// often as needed for dilated taps wider than the image.
int ReflectIndex(int i, int n);

// One smoothing pass: separable (1,4,6,4,1)/16 with taps spaced `step` apart.
PlaneF B3Smooth(const PlaneF& plane, int step);

WaveletStack Decompose(const PlaneF& plane, int levels);

// sum_j gains[j] * details[j] + residual_gain * residual
PlaneF Reconstruct(const WaveletStack& stack, const GainVector& gains);

Raster WaveletFilterRgb(const Raster& raster, int levels, const GainVector& gains);

}  // namespace sketchrestore

#endif  // SKETCHRESTORE_WAVELET_H_
