#include "synthgen/camera.hpp"

#include "synthgen/errors.hpp"

namespace synthgen {

CameraIntrinsics perturb_intrinsics(const CameraIntrinsics& base, RngStream& rng,
                                    double jitter_fraction) {
  if (jitter_fraction < 0.0 || jitter_fraction > 0.2)
    throw ConfigError("intrinsics jitter_fraction must lie in [0, 0.2], got " +
                      std::to_string(jitter_fraction));
  CameraIntrinsics out = base;
  out.fx = base.fx * rng.uniform(1.0 - jitter_fraction, 1.0 + jitter_fraction);
  out.fy = base.fy * rng.uniform(1.0 - jitter_fraction, 1.0 + jitter_fraction);
  out.cx = base.cx * rng.uniform(1.0 - jitter_fraction, 1.0 + jitter_fraction);
  out.cy = base.cy * rng.uniform(1.0 - jitter_fraction, 1.0 + jitter_fraction);
  return out;
}

BboxResult project_bbox(const TexturedMesh& mesh, const Pose& pose,
                        const CameraIntrinsics& cam, double scale) {
  if (mesh.vertices.empty()) throw MeshFormatError("project_bbox: mesh has no vertices");
  const Eigen::Matrix3d rot = pose.rotation.toRotationMatrix();
  BboxResult res;
  for (const auto& v : mesh.vertices) {
    const Eigen::Vector3d p = rot * (scale * v) + pose.translation;
    if (p.z() <= 0.0)
      throw BehindCameraError("vertex of '" + mesh.name + "' projects behind the camera (z=" +
                              std::to_string(p.z()) + ")");
    res.unclipped.extend(project_point(cam, p));
  }
  const Eigen::AlignedBox2d frame(Eigen::Vector2d(0, 0),
                                  Eigen::Vector2d(cam.width, cam.height));
  res.bbox = res.unclipped.intersection(frame);
  if (res.bbox.isEmpty()) res.bbox = Eigen::AlignedBox2d();  // fully off-screen
  const double full = box_area(res.unclipped);
  res.truncation = full > 0.0 ? 1.0 - box_area(res.bbox) / full : 0.0;
  return res;
}

double bbox_overlap_ratio(const Eigen::AlignedBox2d& a, const Eigen::AlignedBox2d& b) {
  const double smaller = std::min(box_area(a), box_area(b));
  if (smaller <= 0.0) return 0.0;
  return box_area(a.intersection(b)) / smaller;
}

}  // namespace synthgen
