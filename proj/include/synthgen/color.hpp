#pragma once

#include <Eigen/Core>

#include "synthgen/image.hpp"

namespace synthgen {

// RGB in [0,1] to (hue in [0,2pi), saturation, value).
Eigen::Vector3d rgb_to_hsv(const Eigen::Vector3d& rgb);

Eigen::Vector3d hsv_to_rgb(const Eigen::Vector3d& hsv);

// Rotates the hue of every texel by `angle` radians, exactly preserving
// saturation and value. angle = 0 reproduces the input texture.
Image hue_rotate_texture(const Image& texture, double angle);

}  // namespace synthgen
