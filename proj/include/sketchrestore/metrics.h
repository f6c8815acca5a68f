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


#ifndef SKETCHRESTORE_METRICS_H_
#define SKETCHRESTORE_METRICS_H_

#include "sketchrestore/raster.h"

namespace sketchrestore {

// Mean squared error over all pixels and channels.
double MeanSquaredError(const Raster& a, const Raster& b);

// 10*log10(255^2 / MSE); +infinity for identical images.
double Psnr(const Raster& a, const Raster& b);

// Mean absolute per-channel error restricted to `mask`; 0 for an empty mask.
double MeanAbsErrorOnMask(const Raster& a, const Raster& b, const Mask& mask);

// Edge energy: mean |4-neighbor Laplacian| over interior pixels and all
// channels. Images narrower or shorter than 3 pixels report 0.
double MeanAbsLaplacian(const Raster& raster);

}  // namespace sketchrestore

#endif  // SKETCHRESTORE_METRICS_H_
