#include "synthgen/renderer.hpp"

#include "synthgen/color.hpp"
#include "synthgen/errors.hpp"

namespace synthgen {

Eigen::Vector3d phong_shade(const Eigen::Vector3d& normal, const Eigen::Vector3d& view_dir,
                            const LightSource& light, const PhongMaterial& material,
                            const Eigen::Vector3d& base_color) {
  const Eigen::Vector3d l = -light.direction;
  const double ndotl = normal.dot(l);
  Eigen::Vector3d color = material.ambient * light.ambient * base_color;
  color += material.diffuse * std::max(0.0, ndotl) * base_color.cwiseProduct(light.color);
  const Eigen::Vector3d reflected = 2.0 * ndotl * normal - l;
  const double rdotv = std::max(0.0, reflected.dot(view_dir));
  if (material.specular > 0.0 && rdotv > 0.0)
    color += material.specular * std::pow(rdotv, material.shininess) * light.color;
  return color.cwiseMax(0.0).cwiseMin(1.0);
}

LightSource sample_light(RngStream& rng, double color_jitter,
                         const std::array<double, 2>& ambient_range) {
  if (color_jitter < 0.0 || color_jitter > 1.0)
    throw ConfigError("light color_jitter must lie in [0,1]");
  LightSource light;
  const double z = rng.uniform();
  const double phi = rng.uniform(0.0, 2.0 * M_PI);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  light.direction = {r * std::cos(phi), r * std::sin(phi), z};
  Eigen::Vector3d c(rng.uniform(1.0 - color_jitter, 1.0), rng.uniform(1.0 - color_jitter, 1.0),
                    rng.uniform(1.0 - color_jitter, 1.0));
  light.color = c / c.maxCoeff();
  light.ambient = rng.uniform(ambient_range[0], ambient_range[1]);
  return light;
}

RenderBuffer make_render_buffer(const CameraIntrinsics& cam, const Image* backdrop) {
  RenderBuffer buf;
  buf.width = cam.width;
  buf.height = cam.height;
  buf.rgb.assign(buf.pixel_count() * 3, 0);
  buf.depth.assign(buf.pixel_count(), std::numeric_limits<float>::infinity());
  buf.instance.assign(buf.pixel_count(), 0);
  if (backdrop) {
    if (backdrop->width != cam.width || backdrop->height != cam.height)
      throw ConfigError("backdrop size does not match the camera resolution");
    buf.rgb = backdrop->data;
  }
  return buf;
}

void rasterize_placement(RenderBuffer& buf, const PlacedObject& placement,
                         const TexturedMesh& model, std::int32_t instance_id,
                         const CameraIntrinsics& cam, const std::vector<LightSource>& lights) {
  const Image shifted = placement.hue_shift != 0.0
                            ? hue_rotate_texture(model.texture, placement.hue_shift)
                            : Image{};
  const Image& tex = placement.hue_shift != 0.0 ? shifted : model.texture;
  const PhongMaterial& mat = model.material;
  const double ambient_intensity = lights.empty() ? 1.0 : lights.front().ambient;
  const Eigen::Matrix3d rot = placement.pose.rotation.toRotationMatrix();

  const std::size_t nv = model.vertices.size();
  std::vector<Eigen::Vector3d> pos(nv);   // camera frame
  std::vector<Eigen::Vector3d> nrm(nv);   // camera frame
  std::vector<Eigen::Vector2d> scr(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    pos[i] = rot * (placement.scale * model.vertices[i]) + placement.pose.translation;
    nrm[i] = rot * model.normals[i];
    scr[i] = pos[i].z() > 1e-9 ? project_point(cam, pos[i]) : Eigen::Vector2d(0, 0);
  }

  for (const auto& tri : model.triangles) {
    const int i0 = tri[0], i1 = tri[1], i2 = tri[2];
    // Near-plane guard; composition keeps geometry well in front of the
    // camera, so partial near clipping is not implemented.
    if (pos[i0].z() <= 1e-9 || pos[i1].z() <= 1e-9 || pos[i2].z() <= 1e-9) continue;
    const Eigen::Vector2d a = scr[i0], b = scr[i1], c = scr[i2];
    const double area = (b - a).x() * (c - a).y() - (b - a).y() * (c - a).x();
    if (area == 0.0) continue;
    const int x0 = std::max(0, static_cast<int>(std::floor(std::min({a.x(), b.x(), c.x()}) - 0.5)));
    const int x1 = std::min(cam.width - 1,
                            static_cast<int>(std::ceil(std::max({a.x(), b.x(), c.x()}) - 0.5)));
    const int y0 = std::max(0, static_cast<int>(std::floor(std::min({a.y(), b.y(), c.y()}) - 0.5)));
    const int y1 = std::min(cam.height - 1,
                            static_cast<int>(std::ceil(std::max({a.y(), b.y(), c.y()}) - 0.5)));
    if (x0 > x1 || y0 > y1) continue;

    const double inv_area = 1.0 / area;
    const double invz0 = 1.0 / pos[i0].z(), invz1 = 1.0 / pos[i1].z(), invz2 = 1.0 / pos[i2].z();
    const Eigen::Vector2d uvz0 = model.uvs[i0] * invz0;
    const Eigen::Vector2d uvz1 = model.uvs[i1] * invz1;
    const Eigen::Vector2d uvz2 = model.uvs[i2] * invz2;
    const Eigen::Vector3d nz0 = nrm[i0] * invz0;
    const Eigen::Vector3d nz1 = nrm[i1] * invz1;
    const Eigen::Vector3d nz2 = nrm[i2] * invz2;

    for (int py = y0; py <= y1; ++py) {
      const Eigen::Vector2d row(x0 + 0.5, py + 0.5);
      double w0 = (c - b).x() * (row - b).y() - (c - b).y() * (row - b).x();
      double w1 = (a - c).x() * (row - c).y() - (a - c).y() * (row - c).x();
      double w2 = (b - a).x() * (row - a).y() - (b - a).y() * (row - a).x();
      const double dw0 = -(c - b).y();
      const double dw1 = -(a - c).y();
      const double dw2 = -(b - a).y();
      std::size_t px_index = static_cast<std::size_t>(py) * buf.width + x0;
      for (int px = x0; px <= x1; ++px, ++px_index, w0 += dw0, w1 += dw1, w2 += dw2) {
        const bool inside = area > 0.0 ? (w0 >= 0.0 && w1 >= 0.0 && w2 >= 0.0)
                                       : (w0 <= 0.0 && w1 <= 0.0 && w2 <= 0.0);
        if (!inside) continue;
        const double l0 = w0 * inv_area, l1 = w1 * inv_area, l2 = w2 * inv_area;
        // Screen-linear interpolation of attr/z is perspective correct.
        const double invz = l0 * invz0 + l1 * invz1 + l2 * invz2;
        const double z = 1.0 / invz;
        if (static_cast<float>(z) >= buf.depth[px_index]) continue;

        const Eigen::Vector2d uv = (l0 * uvz0 + l1 * uvz1 + l2 * uvz2) * z;
        Eigen::Vector3d n = (l0 * nz0 + l1 * nz1 + l2 * nz2) * z;
        const double nlen = n.norm();
        n = nlen > 1e-12 ? Eigen::Vector3d(n / nlen) : Eigen::Vector3d(0, 0, -1);
        const Eigen::Vector3d surface = pixel_ray(cam, px + 0.5, py + 0.5) * z;
        const Eigen::Vector3d view_dir = -surface.normalized();
        if (n.dot(view_dir) < 0.0) n = -n;

        // v axis: OBJ UVs have origin bottom-left, rasters top-left.
        const Eigen::Vector3d base =
            sample_bilinear(tex, uv.x() * tex.width, (1.0 - uv.y()) * tex.height);

        Eigen::Vector3d color = mat.ambient * ambient_intensity * base;
        for (const auto& light : lights) {
          const Eigen::Vector3d l = -light.direction;
          const double ndotl = n.dot(l);
          color += mat.diffuse * std::max(0.0, ndotl) * base.cwiseProduct(light.color);
          const Eigen::Vector3d refl = 2.0 * ndotl * n - l;
          const double rdotv = std::max(0.0, refl.dot(view_dir));
          if (mat.specular > 0.0 && rdotv > 0.0)
            color += mat.specular * std::pow(rdotv, mat.shininess) * light.color;
        }
        color = color.cwiseMax(0.0).cwiseMin(1.0);

        buf.depth[px_index] = static_cast<float>(z);
        buf.instance[px_index] = instance_id;
        buf.rgb[px_index * 3 + 0] = quantize_channel(color.x());
        buf.rgb[px_index * 3 + 1] = quantize_channel(color.y());
        buf.rgb[px_index * 3 + 2] = quantize_channel(color.z());
      }
    }
  }
}

RenderBuffer rasterize(std::span<const PlacedObject> placements,
                       const std::vector<TexturedMesh>& models, const CameraIntrinsics& cam,
                       const std::vector<LightSource>& lights, const Image* backdrop) {
  RenderBuffer buf = make_render_buffer(cam, backdrop);
  for (std::size_t i = 0; i < placements.size(); ++i)
    rasterize_placement(buf, placements[i], models[placements[i].model_index],
                        static_cast<std::int32_t>(i + 1), cam, lights);
  return buf;
}

}  // namespace synthgen
