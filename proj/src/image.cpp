#include "synthgen/image.hpp"

#include <cmath>

namespace synthgen {

Eigen::Vector3d sample_bilinear(const Image& img, double x, double y) {
  const double fx = x - 0.5;
  const double fy = y - 0.5;
  int x0 = static_cast<int>(std::floor(fx));
  int y0 = static_cast<int>(std::floor(fy));
  const double ax = fx - x0;
  const double ay = fy - y0;
  const auto cx = [&](int v) { return std::clamp(v, 0, img.width - 1); };
  const auto cy = [&](int v) { return std::clamp(v, 0, img.height - 1); };
  const int x1 = cx(x0 + 1), y1 = cy(y0 + 1);
  x0 = cx(x0);
  y0 = cy(y0);
  Eigen::Vector3d out = Eigen::Vector3d::Zero();
  for (int c = 0; c < 3; ++c) {
    const double top = img.at(x0, y0, c) * (1.0 - ax) + img.at(x1, y0, c) * ax;
    const double bot = img.at(x0, y1, c) * (1.0 - ax) + img.at(x1, y1, c) * ax;
    out[c] = (top * (1.0 - ay) + bot * ay) / 255.0;
  }
  return out;
}

Image resize_bilinear(const Image& img, int w, int h) {
  Image out(w, h, img.channels);
  const double sx = static_cast<double>(img.width) / w;
  const double sy = static_cast<double>(img.height) / h;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const Eigen::Vector3d c = sample_bilinear(img, (x + 0.5) * sx, (y + 0.5) * sy);
      for (int ch = 0; ch < 3; ++ch) out.at(x, y, ch) = quantize_channel(c[ch]);
    }
  }
  return out;
}

Image resize_cover(const Image& img, int w, int h) {
  const double scale = std::max(static_cast<double>(w) / img.width,
                                static_cast<double>(h) / img.height);
  const int sw = std::max(w, static_cast<int>(std::lround(img.width * scale)));
  const int sh = std::max(h, static_cast<int>(std::lround(img.height * scale)));
  Image scaled = (sw == img.width && sh == img.height) ? img : resize_bilinear(img, sw, sh);
  if (sw == w && sh == h) return scaled;
  Image out(w, h, img.channels);
  const int ox = (sw - w) / 2;
  const int oy = (sh - h) / 2;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      for (int c = 0; c < img.channels; ++c)
        out.at(x, y, c) = scaled.at(x + ox, y + oy, c);
  return out;
}

void draw_rect(Image& img, double x0, double y0, double x1, double y1,
               Eigen::Vector3d color, int thickness) {
  const int ix0 = static_cast<int>(std::floor(x0));
  const int iy0 = static_cast<int>(std::floor(y0));
  const int ix1 = static_cast<int>(std::ceil(x1)) - 1;
  const int iy1 = static_cast<int>(std::ceil(y1)) - 1;
  const auto put = [&](int x, int y) {
    if (x < 0 || y < 0 || x >= img.width || y >= img.height) return;
    for (int c = 0; c < 3; ++c) img.at(x, y, c) = quantize_channel(color[c]);
  };
  for (int t = 0; t < thickness; ++t) {
    for (int x = ix0; x <= ix1; ++x) {
      put(x, iy0 + t);
      put(x, iy1 - t);
    }
    for (int y = iy0; y <= iy1; ++y) {
      put(ix0 + t, y);
      put(ix1 - t, y);
    }
  }
}

}  // namespace synthgen
