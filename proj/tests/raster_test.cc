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


#include <doctest.h>

#include <random>

#include "sketchrestore/error.h"
#include "sketchrestore/raster.h"
#include "test_util.h"

namespace sketchrestore {
namespace {

TEST_CASE("raster rejects empty dimensions") {
  CHECK_THROWS_AS(Raster(0, 1), Error);
  CHECK_THROWS_AS(Mask(3, 0), Error);
  CHECK_THROWS_AS(Raster(2, 2, std::vector<Rgb>(3)), Error);
}

TEST_CASE("to_planes carries exact channel values") {
  Raster r(1, 1, Rgb{255, 0, 0});
  const auto planes = ToPlanes(r);
  CHECK(planes[0][0] == 255.0);
  CHECK(planes[1][0] == 0.0);
  CHECK(planes[2][0] == 0.0);

  const auto zero = ToPlanes(Raster(4, 3));
  for (const PlaneF& p : zero) {
    for (double v : p.values()) CHECK(v == 0.0);
  }
}

TEST_CASE("from_planes rounds half away from zero then clamps") {
  auto one = [](double v) {
    PlaneF p(1, 1, v);
    return FromPlanes(p, p, p)[0].r;
  };
  CHECK(one(127.5) == 128);
  CHECK(one(127.4999) == 127);
  CHECK(one(-3.0) == 0);
  CHECK(one(300.0) == 255);
  CHECK(one(255.4) == 255);
  CHECK(one(255.6) == 255);
  CHECK(one(-0.4) == 0);
  CHECK(one(-0.5) == 0);
  CHECK(one(0.5) == 1);
}

TEST_CASE("from_planes rejects mismatched planes and non-finite values") {
  PlaneF a(2, 2), b(2, 3);
  try {
    FromPlanes(a, a, b);
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDimensionMismatch);
  }
  PlaneF bad(1, 1, std::nan(""));
  CHECK_THROWS_AS(FromPlanes(bad, bad, bad), Error);
}

TEST_CASE("property: from_planes inverts to_planes") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int w = 1 + static_cast<int>(rng() % 17);
    const int h = 1 + static_cast<int>(rng() % 17);
    const Raster r = testing::RandomRaster(rng, w, h);
    CHECK(FromPlanes(ToPlanes(r)) == r);
  }
}

}  // namespace
}  // namespace sketchrestore
