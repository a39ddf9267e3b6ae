#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cstdint>
#include <vector>

namespace synthgen {

// Interleaved 8-bit raster, row-major, origin at the top-left pixel.
struct Image {
  int width = 0;
  int height = 0;
  int channels = 3;
  std::vector<std::uint8_t> data;

  Image() = default;
  Image(int w, int h, int c = 3, std::uint8_t fill = 0)
      : width(w), height(h), channels(c),
        data(static_cast<std::size_t>(w) * h * c, fill) {}

  std::uint8_t& at(int x, int y, int c) {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  std::uint8_t at(int x, int y, int c) const {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }

  Eigen::Vector3d rgb_at(int x, int y) const {
    return {at(x, y, 0) / 255.0, at(x, y, 1) / 255.0, at(x, y, 2) / 255.0};
  }

  bool empty() const { return data.empty(); }
  std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
};

inline std::uint8_t quantize_channel(double v) {
  return static_cast<std::uint8_t>(std::clamp(std::lround(v * 255.0), 0l, 255l));
}

// Bilinear sample with clamp-to-edge, continuous coordinates in pixels
// (the center of pixel (0,0) is at (0.5, 0.5)). Returns RGB in [0,1].
Eigen::Vector3d sample_bilinear(const Image& img, double x, double y);

// Bilinear resize to exactly (w, h).
Image resize_bilinear(const Image& img, int w, int h);

// Scale-to-cover then center-crop; used to fit photos to the render size.
Image resize_cover(const Image& img, int w, int h);

// Axis-aligned rectangle outline, clipped to the image.
void draw_rect(Image& img, double x0, double y0, double x1, double y1,
               Eigen::Vector3d color, int thickness = 2);

}  // namespace synthgen
