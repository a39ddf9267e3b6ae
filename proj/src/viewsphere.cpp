#include "synthgen/viewsphere.hpp"

#include <array>
#include <map>

#include "synthgen/errors.hpp"

namespace synthgen {

namespace {

struct IcoMesh {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<Eigen::Vector3i> faces;
};

IcoMesh base_icosahedron() {
  // Golden-ratio construction; vertices normalized to the unit sphere.
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  IcoMesh m;
  const std::array<Eigen::Vector3d, 12> raw = {{
      {-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0},
      {0, -1, t}, {0, 1, t}, {0, -1, -t}, {0, 1, -t},
      {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1},
  }};
  for (const auto& v : raw) m.vertices.push_back(v.normalized());
  m.faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1},
  };
  return m;
}

IcoMesh subdivide_once(const IcoMesh& in) {
  IcoMesh out;
  out.vertices = in.vertices;
  // Shared-edge midpoints are created once, which keeps vertices exactly
  // deduplicated without any tolerance.
  std::map<std::pair<int, int>, int> midpoint;
  const auto mid = [&](int a, int b) {
    const auto key = std::minmax(a, b);
    auto [it, inserted] = midpoint.try_emplace(key, static_cast<int>(out.vertices.size()));
    if (inserted)
      out.vertices.push_back((out.vertices[a] + out.vertices[b]).normalized());
    return it->second;
  };
  for (const auto& f : in.faces) {
    const int ab = mid(f[0], f[1]);
    const int bc = mid(f[1], f[2]);
    const int ca = mid(f[2], f[0]);
    out.faces.push_back({f[0], ab, ca});
    out.faces.push_back({f[1], bc, ab});
    out.faces.push_back({f[2], ca, bc});
    out.faces.push_back({ab, bc, ca});
  }
  return out;
}

}  // namespace

ViewpointSphere subdivide_icosahedron(int level) {
  if (level < 0) throw ConfigError("subdivision level must be non-negative");
  if (level > 5)
    throw ResourceBoundError("subdivision level " + std::to_string(level) +
                             " exceeds the supported maximum of 5 (" +
                             std::to_string(10L * (1L << (2 * level)) + 2) + " vertices)");
  IcoMesh mesh = base_icosahedron();
  for (int i = 0; i < level; ++i) mesh = subdivide_once(mesh);
  return ViewpointSphere{std::move(mesh.vertices), level};
}

ViewpointSphere upper_hemisphere(const ViewpointSphere& sphere) {
  ViewpointSphere out;
  out.subdivision_level = sphere.subdivision_level;
  for (const auto& v : sphere.vertices)
    if (v.z() >= -1e-9) out.vertices.push_back(v);
  return out;
}

Eigen::Quaterniond viewpoint_rotation(const Eigen::Vector3d& vertex, double inplane_angle) {
  const Eigen::Vector3d f = vertex.normalized();
  Eigen::Matrix3d frame;
  const bool near_pole = (f - Eigen::Vector3d::UnitZ()).norm() < 1e-3 ||
                         (f + Eigen::Vector3d::UnitZ()).norm() < 1e-3;
  if (near_pole) {
    // Anchor the frame to +X so the canonical view maps to the identity.
    const Eigen::Vector3d r =
        (Eigen::Vector3d::UnitX() - f * f.x()).normalized();
    frame.col(0) = r;
    frame.col(1) = f.cross(r);
  } else {
    const Eigen::Vector3d u = (Eigen::Vector3d::UnitZ() - f * f.z()).normalized();
    frame.col(0) = u.cross(f);
    frame.col(1) = u;
  }
  frame.col(2) = f;
  const Eigen::Quaterniond q(frame);
  return (q * Eigen::Quaterniond(Eigen::AngleAxisd(inplane_angle, Eigen::Vector3d::UnitZ())))
      .normalized();
}

std::vector<double> scale_distances(double d_near, double d_far, int num_levels) {
  if (!(0.0 < d_near && d_near < d_far))
    throw ConfigError("scale distances require 0 < d_near < d_far");
  if (num_levels < 2) throw ConfigError("scale distances require at least 2 levels");
  std::vector<double> out(num_levels);
  const double inv_near = 1.0 / d_near;
  const double inv_far = 1.0 / d_far;
  for (int i = 0; i < num_levels; ++i) {
    const double a = static_cast<double>(i) / (num_levels - 1);
    out[i] = 1.0 / (inv_near + a * (inv_far - inv_near));
  }
  return out;
}

}  // namespace synthgen
