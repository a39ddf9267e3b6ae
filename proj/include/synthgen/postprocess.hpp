#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "synthgen/renderer.hpp"

namespace synthgen {

enum class FusedLayer : std::uint8_t { None = 0, Background = 1, Foreground = 2, Occluder = 3 };

// Result of stacking the three layers: occluder over foreground over
// background, by layer precedence rather than depth. Per-pixel provenance
// is kept so coverage and occlusion can be measured afterwards.
struct FusedSample {
  Image rgb;
  std::vector<std::uint8_t> layer;     // FusedLayer per pixel
  std::vector<std::int32_t> instance;  // id within the winning layer, 0 if none
  std::vector<long> fg_visible_pre;    // visible pixels per foreground object
  std::vector<long> fg_visible_post;   // same, after occluder overwrite
};

// Fuses the three layers. Buffers must share dimensions (ConfigError
// otherwise). fg_visible_pre/post are indexed by foreground placement.
FusedSample fuse(const RenderBuffer& background, const RenderBuffer& foreground,
                 const RenderBuffer& occluders);

// I.i.d. zero-mean Gaussian noise, one sigma per image drawn uniformly from
// sigma_range (8-bit scale, must lie within [0, 30]), added independently
// per channel and clamped to [0, 255].
Image add_white_noise(Image img, RngStream& rng, const std::array<double, 2>& sigma_range);

// Separable Gaussian blur with reflected borders. Kernel size is drawn from
// kernel_sizes (all odd) and sigma uniformly from sigma_range; size 1 leaves
// the image untouched. The kernel is normalized to sum 1.
Image random_blur(Image img, RngStream& rng, const std::vector<int>& kernel_sizes,
                  const std::array<double, 2>& sigma_range);

}  // namespace synthgen
