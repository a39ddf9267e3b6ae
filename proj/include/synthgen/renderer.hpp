#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "synthgen/placement.hpp"
#include "synthgen/rng.hpp"

namespace synthgen {

// One rendered layer: color, depth and per-pixel instance ids.
// instance is 0 for empty pixels, placement index + 1 otherwise, and is
// nonzero exactly where depth is finite.
struct RenderBuffer {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;
  std::vector<float> depth;
  std::vector<std::int32_t> instance;

  std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
  std::int32_t instance_at(int x, int y) const {
    return instance[static_cast<std::size_t>(y) * width + x];
  }
};

// Directional light. `direction` is the propagation direction (from the
// light into the scene) in the camera frame; sampled directions have
// positive z so lit surfaces are the camera-facing ones.
struct LightSource {
  Eigen::Vector3d direction = Eigen::Vector3d::UnitZ();
  Eigen::Vector3d color = Eigen::Vector3d::Ones();
  double ambient = 0.4;
};

// Phong reflection for one light:
//   ambient*base + kd*max(0, n.l)*base*light_color
//                + ks*max(0, r.v)^shininess*light_color
// with the ambient intensity ka * light.ambient, channelwise clamped to
// [0,1]. normal and view_dir must be unit length; view_dir points from the
// surface toward the camera.
Eigen::Vector3d phong_shade(const Eigen::Vector3d& normal, const Eigen::Vector3d& view_dir,
                            const LightSource& light, const PhongMaterial& material,
                            const Eigen::Vector3d& base_color);

// Random directional light: propagation direction uniform on the z > 0
// hemisphere, white color perturbed channelwise by uniform factors in
// [1 - color_jitter, 1] then renormalized to max channel 1, ambient uniform
// in ambient_range. color_jitter must lie in [0,1].
LightSource sample_light(RngStream& rng, double color_jitter,
                         const std::array<double, 2>& ambient_range = {0.3, 0.6});

// Empty buffer sized for the camera; `backdrop` pre-fills the color plane
// (used for real background photos) and leaves instance/depth empty.
RenderBuffer make_render_buffer(const CameraIntrinsics& cam, const Image* backdrop = nullptr);

// Z-buffered rasterization of one placement into the buffer. Perspective-
// correct UV/normal interpolation, bilinear texture lookup, Phong shading
// with all lights (ambient taken from the first). Geometry off the image is
// clipped; normals are flipped toward the camera so single-sided scanned
// surfaces shade correctly from either side.
void rasterize_placement(RenderBuffer& buf, const PlacedObject& placement,
                         const TexturedMesh& model, std::int32_t instance_id,
                         const CameraIntrinsics& cam, const std::vector<LightSource>& lights);

// Full layer render: every placement in order, instance ids 1..N.
// Deterministic: identical inputs give bit-identical buffers.
RenderBuffer rasterize(std::span<const PlacedObject> placements,
                       const std::vector<TexturedMesh>& models, const CameraIntrinsics& cam,
                       const std::vector<LightSource>& lights,
                       const Image* backdrop = nullptr);

// Silhouette-only rasterization: calls visit(x, y) for every covered pixel,
// possibly more than once where triangles overlap. No shading, no depth.
// Used for coverage accounting and occluder sizing.
template <class Visit>
void rasterize_silhouette(const TexturedMesh& mesh, const Pose& pose, double scale,
                          const CameraIntrinsics& cam, Visit&& visit) {
  const Eigen::Matrix3d rot = pose.rotation.toRotationMatrix();
  std::vector<Eigen::Vector2d> screen(mesh.vertices.size());
  std::vector<double> zs(mesh.vertices.size());
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    const Eigen::Vector3d p = rot * (scale * mesh.vertices[i]) + pose.translation;
    zs[i] = p.z();
    screen[i] = p.z() > 1e-9 ? project_point(cam, p) : Eigen::Vector2d(0, 0);
  }
  for (const auto& tri : mesh.triangles) {
    if (zs[tri[0]] <= 1e-9 || zs[tri[1]] <= 1e-9 || zs[tri[2]] <= 1e-9) continue;
    const Eigen::Vector2d& a = screen[tri[0]];
    const Eigen::Vector2d& b = screen[tri[1]];
    const Eigen::Vector2d& c = screen[tri[2]];
    const double area = (b - a).x() * (c - a).y() - (b - a).y() * (c - a).x();
    if (area == 0.0) continue;
    const int x0 = std::max(0, static_cast<int>(std::floor(std::min({a.x(), b.x(), c.x()}) - 0.5)));
    const int x1 = std::min(cam.width - 1,
                            static_cast<int>(std::ceil(std::max({a.x(), b.x(), c.x()}) - 0.5)));
    const int y0 = std::max(0, static_cast<int>(std::floor(std::min({a.y(), b.y(), c.y()}) - 0.5)));
    const int y1 = std::min(cam.height - 1,
                            static_cast<int>(std::ceil(std::max({a.y(), b.y(), c.y()}) - 0.5)));
    if (x0 > x1 || y0 > y1) continue;
    const double sign = area > 0.0 ? 1.0 : -1.0;
    for (int py = y0; py <= y1; ++py) {
      const Eigen::Vector2d row(x0 + 0.5, py + 0.5);
      double w0 = sign * ((c - b).x() * (row - b).y() - (c - b).y() * (row - b).x());
      double w1 = sign * ((a - c).x() * (row - c).y() - (a - c).y() * (row - c).x());
      double w2 = sign * ((b - a).x() * (row - a).y() - (b - a).y() * (row - a).x());
      const double dw0 = sign * -(c - b).y();
      const double dw1 = sign * -(a - c).y();
      const double dw2 = sign * -(b - a).y();
      for (int px = x0; px <= x1; ++px) {
        if (w0 >= 0.0 && w1 >= 0.0 && w2 >= 0.0) visit(px, py);
        w0 += dw0;
        w1 += dw1;
        w2 += dw2;
      }
    }
  }
}

}  // namespace synthgen
