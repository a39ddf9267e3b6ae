#include "synthgen/postprocess.hpp"

#include <cmath>

#include "synthgen/errors.hpp"

namespace synthgen {

FusedSample fuse(const RenderBuffer& background, const RenderBuffer& foreground,
                 const RenderBuffer& occluders) {
  if (background.width != foreground.width || background.height != foreground.height ||
      background.width != occluders.width || background.height != occluders.height)
    throw ConfigError("fuse: layer dimensions do not match");

  FusedSample out;
  out.rgb = Image(background.width, background.height, 3);
  const std::size_t n = background.pixel_count();
  out.layer.assign(n, static_cast<std::uint8_t>(FusedLayer::None));
  out.instance.assign(n, 0);

  std::int32_t max_fg = 0;
  for (std::size_t i = 0; i < n; ++i) max_fg = std::max(max_fg, foreground.instance[i]);
  out.fg_visible_pre.assign(max_fg, 0);
  out.fg_visible_post.assign(max_fg, 0);

  for (std::size_t i = 0; i < n; ++i) {
    const RenderBuffer* src = &background;
    FusedLayer layer = background.instance[i] != 0 ? FusedLayer::Background : FusedLayer::None;
    if (const std::int32_t fg = foreground.instance[i]; fg != 0) {
      ++out.fg_visible_pre[fg - 1];
      src = &foreground;
      layer = FusedLayer::Foreground;
      if (occluders.instance[i] == 0) ++out.fg_visible_post[fg - 1];
    }
    if (occluders.instance[i] != 0) {
      src = &occluders;
      layer = FusedLayer::Occluder;
    }
    out.layer[i] = static_cast<std::uint8_t>(layer);
    out.instance[i] = src->instance[i];
    out.rgb.data[i * 3 + 0] = src->rgb[i * 3 + 0];
    out.rgb.data[i * 3 + 1] = src->rgb[i * 3 + 1];
    out.rgb.data[i * 3 + 2] = src->rgb[i * 3 + 2];
  }
  return out;
}

Image add_white_noise(Image img, RngStream& rng, const std::array<double, 2>& sigma_range) {
  if (sigma_range[0] < 0.0 || sigma_range[1] > 30.0 || sigma_range[0] > sigma_range[1])
    throw ConfigError("noise sigma_range must be an ordered subrange of [0, 30]");
  const double sigma = rng.uniform(sigma_range[0], sigma_range[1]);
  if (sigma <= 0.0) return img;
  for (auto& value : img.data) {
    const double noisy = value + sigma * rng.normal();
    value = static_cast<std::uint8_t>(std::clamp(std::lround(noisy), 0l, 255l));
  }
  return img;
}

Image random_blur(Image img, RngStream& rng, const std::vector<int>& kernel_sizes,
                  const std::array<double, 2>& sigma_range) {
  if (kernel_sizes.empty()) throw ConfigError("blur kernel_sizes must not be empty");
  for (int k : kernel_sizes)
    if (k < 1 || k % 2 == 0)
      throw ConfigError("blur kernel sizes must be odd and positive, got " + std::to_string(k));
  const int size = kernel_sizes[rng.uniform_int(static_cast<int>(kernel_sizes.size()))];
  const double sigma = rng.uniform(sigma_range[0], sigma_range[1]);
  if (size == 1) return img;

  const int radius = size / 2;
  std::vector<double> kernel(size);
  double sum = 0.0;
  for (int j = -radius; j <= radius; ++j) {
    kernel[j + radius] = std::exp(-0.5 * (j * j) / (sigma * sigma));
    sum += kernel[j + radius];
  }
  for (double& w : kernel) w /= sum;

  const int w = img.width, h = img.height, ch = img.channels;
  const auto reflect = [](int i, int n) {
    if (i < 0) return -i - 1;
    if (i >= n) return 2 * n - i - 1;
    return i;
  };

  // Horizontal pass in floats, vertical pass, single rounding at the end.
  std::vector<float> tmp(static_cast<std::size_t>(w) * h * ch);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      for (int c = 0; c < ch; ++c) {
        double acc = 0.0;
        for (int j = -radius; j <= radius; ++j)
          acc += kernel[j + radius] * img.at(reflect(x + j, w), y, c);
        tmp[(static_cast<std::size_t>(y) * w + x) * ch + c] = static_cast<float>(acc);
      }
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      for (int c = 0; c < ch; ++c) {
        double acc = 0.0;
        for (int j = -radius; j <= radius; ++j)
          acc += kernel[j + radius] *
                 tmp[(static_cast<std::size_t>(reflect(y + j, h)) * w + x) * ch + c];
        img.at(x, y, c) = static_cast<std::uint8_t>(std::clamp(std::lround(acc), 0l, 255l));
      }
  return img;
}

}  // namespace synthgen
