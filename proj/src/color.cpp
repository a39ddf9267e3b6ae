#include "synthgen/color.hpp"

#include <cmath>

namespace synthgen {

Eigen::Vector3d rgb_to_hsv(const Eigen::Vector3d& rgb) {
  const double maxc = rgb.maxCoeff();
  const double minc = rgb.minCoeff();
  const double delta = maxc - minc;
  double h = 0.0;  // in sextants [0,6)
  if (delta > 0.0) {
    if (maxc == rgb.x())
      h = std::fmod((rgb.y() - rgb.z()) / delta + 6.0, 6.0);
    else if (maxc == rgb.y())
      h = (rgb.z() - rgb.x()) / delta + 2.0;
    else
      h = (rgb.x() - rgb.y()) / delta + 4.0;
  }
  const double s = maxc > 0.0 ? delta / maxc : 0.0;
  return {h * M_PI / 3.0, s, maxc};
}

Eigen::Vector3d hsv_to_rgb(const Eigen::Vector3d& hsv) {
  const double h = std::fmod(std::fmod(hsv.x(), 2.0 * M_PI) + 2.0 * M_PI, 2.0 * M_PI) *
                   (3.0 / M_PI);  // back to sextants
  const double s = hsv.y();
  const double v = hsv.z();
  const double c = v * s;
  const double x = c * (1.0 - std::abs(std::fmod(h, 2.0) - 1.0));
  const double m = v - c;
  Eigen::Vector3d rgb;
  switch (static_cast<int>(h) % 6) {
    case 0: rgb = {c, x, 0}; break;
    case 1: rgb = {x, c, 0}; break;
    case 2: rgb = {0, c, x}; break;
    case 3: rgb = {0, x, c}; break;
    case 4: rgb = {x, 0, c}; break;
    default: rgb = {c, 0, x}; break;
  }
  return rgb + Eigen::Vector3d::Constant(m);
}

Image hue_rotate_texture(const Image& texture, double angle) {
  if (angle == 0.0) return texture;
  Image out = texture;
  const std::size_t n = texture.pixel_count();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t o = i * texture.channels;
    Eigen::Vector3d hsv = rgb_to_hsv({texture.data[o] / 255.0, texture.data[o + 1] / 255.0,
                                      texture.data[o + 2] / 255.0});
    hsv.x() += angle;
    const Eigen::Vector3d rgb = hsv_to_rgb(hsv);
    out.data[o] = quantize_channel(rgb.x());
    out.data[o + 1] = quantize_channel(rgb.y());
    out.data[o + 2] = quantize_channel(rgb.z());
  }
  return out;
}

}  // namespace synthgen
