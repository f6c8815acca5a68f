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


#ifndef SKETCHRESTORE_RASTER_H_
#define SKETCHRESTORE_RASTER_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sketchrestore {

struct Rgb {
  uint8_t r = 0;
  uint8_t g = 0;
  uint8_t b = 0;

  uint8_t operator[](int c) const { return c == 0 ? r : (c == 1 ? g : b); }
  uint8_t& operator[](int c) { return c == 0 ? r : (c == 1 ? g : b); }

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

inline constexpr Rgb kWhite{255, 255, 255};

// Row-major 8-bit RGB image. Dimensions are at least 1x1.
class Raster {
 public:
  Raster(int width, int height, Rgb fill = Rgb{});
  Raster(int width, int height, std::vector<Rgb> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  size_t size() const { return pixels_.size(); }

  const Rgb& at(int x, int y) const { return pixels_[Index(x, y)]; }
  Rgb& at(int x, int y) { return pixels_[Index(x, y)]; }
  const Rgb& operator[](size_t i) const { return pixels_[i]; }
  Rgb& operator[](size_t i) { return pixels_[i]; }

  std::span<const Rgb> pixels() const { return pixels_; }
  std::span<Rgb> pixels() { return pixels_; }

  bool SameShape(const Raster& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const Raster&, const Raster&) = default;

 private:
  size_t Index(int x, int y) const {
    return static_cast<size_t>(y) * static_cast<size_t>(width_) +
           static_cast<size_t>(x);
  }

  int width_;
  int height_;
  std::vector<Rgb> pixels_;
};

// Per-pixel selection; true marks a pixel to be reconstructed.
class Mask {
 public:
  Mask(int width, int height, bool fill = false);

  int width() const { return width_; }
  int height() const { return height_; }
  size_t size() const { return bits_.size(); }

  bool at(int x, int y) const { return bits_[Index(x, y)] != 0; }
  void set(int x, int y, bool v) { bits_[Index(x, y)] = v ? 1 : 0; }
  bool operator[](size_t i) const { return bits_[i] != 0; }
  void set(size_t i, bool v) { bits_[i] = v ? 1 : 0; }

  bool Matches(const Raster& r) const {
    return width_ == r.width() && height_ == r.height();
  }
  bool SameShape(const Mask& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  size_t Count() const;

  friend bool operator==(const Mask&, const Mask&) = default;

 private:
  size_t Index(int x, int y) const {
    return static_cast<size_t>(y) * static_cast<size_t>(width_) +
           static_cast<size_t>(x);
  }

  int width_;
  int height_;
  std::vector<uint8_t> bits_;
};

// Single-channel working-precision plane used by the filter math.
class PlaneF {
 public:
  PlaneF(int width, int height, double fill = 0.0);
  PlaneF(int width, int height, std::vector<double> values);

  int width() const { return width_; }
  int height() const { return height_; }
  size_t size() const { return values_.size(); }

  double at(int x, int y) const { return values_[Index(x, y)]; }
  double& at(int x, int y) { return values_[Index(x, y)]; }
  double operator[](size_t i) const { return values_[i]; }
  double& operator[](size_t i) { return values_[i]; }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  double* Row(int y) { return values_.data() + Index(0, y); }
  const double* Row(int y) const { return values_.data() + Index(0, y); }

  bool SameShape(const PlaneF& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const PlaneF&, const PlaneF&) = default;

 private:
  size_t Index(int x, int y) const {
    return static_cast<size_t>(y) * static_cast<size_t>(width_) +
           static_cast<size_t>(x);
  }

  int width_;
  int height_;
  std::vector<double> values_;
};

// Round half away from zero, then clamp to [0,255].
uint8_t QuantizeChannel(double v);

std::array<PlaneF, 3> ToPlanes(const Raster& raster);
Raster FromPlanes(const PlaneF& r, const PlaneF& g, const PlaneF& b);
inline Raster FromPlanes(const std::array<PlaneF, 3>& planes) {
  return FromPlanes(planes[0], planes[1], planes[2]);
}

}  // namespace sketchrestore

#endif  // SKETCHRESTORE_RASTER_H_
