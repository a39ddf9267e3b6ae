#pragma once

#include <Eigen/Geometry>
#include <optional>

#include "synthgen/mesh.hpp"
#include "synthgen/rng.hpp"

namespace synthgen {

// Pinhole intrinsics. Image coordinates are continuous: pixel (0,0) covers
// [0,1)x[0,1) and has its center at (0.5, 0.5).
struct CameraIntrinsics {
  double fx = 520.0;
  double fy = 520.0;
  double cx = 480.0;
  double cy = 360.0;
  int width = 960;
  int height = 720;
};

// Indices into the pose space a scheduled pose came from.
struct PoseProvenance {
  int scale_index = 0;
  int view_index = 0;
  int inplane_index = 0;
};

// Rigid transform of a model into the camera frame. The camera looks down
// +Z; anything rendered must have positive depth.
struct Pose {
  Eigen::Quaterniond rotation = Eigen::Quaterniond::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d(0, 0, 1);
  std::optional<PoseProvenance> provenance;
};

// Multiplies fx, fy, cx, cy by independent uniform factors in
// [1 - jitter_fraction, 1 + jitter_fraction]. Image size is unchanged.
// jitter_fraction must lie in [0, 0.2].
CameraIntrinsics perturb_intrinsics(const CameraIntrinsics& base, RngStream& rng,
                                    double jitter_fraction);

inline Eigen::Vector2d project_point(const CameraIntrinsics& cam, const Eigen::Vector3d& p) {
  return {cam.fx * p.x() / p.z() + cam.cx, cam.fy * p.y() / p.z() + cam.cy};
}

// Camera-frame ray direction with unit depth for a continuous pixel position.
inline Eigen::Vector3d pixel_ray(const CameraIntrinsics& cam, double u, double v) {
  return {(u - cam.cx) / cam.fx, (v - cam.cy) / cam.fy, 1.0};
}

struct BboxResult {
  Eigen::AlignedBox2d bbox;       // clipped to the image
  Eigen::AlignedBox2d unclipped;  // raw vertex-projection extent
  double truncation = 0.0;        // 1 - clipped area / unclipped area
};

// Tight axis-aligned box of the projected mesh vertices, clipped to the
// image. Throws BehindCameraError if any transformed vertex has z <= 0.
BboxResult project_bbox(const TexturedMesh& mesh, const Pose& pose,
                        const CameraIntrinsics& cam, double scale = 1.0);

inline double box_area(const Eigen::AlignedBox2d& b) {
  if (b.isEmpty()) return 0.0;
  return b.sizes().x() * b.sizes().y();
}

// Intersection area over the smaller box's area; 0 when either is empty.
double bbox_overlap_ratio(const Eigen::AlignedBox2d& a, const Eigen::AlignedBox2d& b);

}  // namespace synthgen
