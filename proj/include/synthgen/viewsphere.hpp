#pragma once

#include <Eigen/Geometry>
#include <vector>

namespace synthgen {

// Near-uniform out-of-plane view directions: icosahedron vertices after
// recursive midpoint subdivision, reprojected to the unit sphere.
struct ViewpointSphere {
  std::vector<Eigen::Vector3d> vertices;
  int subdivision_level = 0;
};

// The discrete pose space a curriculum walks: out-of-plane views x equally
// spaced in-plane angles x camera distances (nearest first).
struct PoseSpace {
  ViewpointSphere sphere;
  int inplane_steps = 1;
  std::vector<double> scale_distances;

  int num_views() const { return static_cast<int>(sphere.vertices.size()); }
  int num_scales() const { return static_cast<int>(scale_distances.size()); }
  double inplane_angle(int index) const {
    return 2.0 * M_PI * index / inplane_steps;
  }
  long tuples_per_object() const {
    return static_cast<long>(num_views()) * inplane_steps * num_scales();
  }
};

// Vertex count is 10*4^level + 2. Levels above 5 are rejected
// (ResourceBoundError) since the count grows fourfold per level.
ViewpointSphere subdivide_icosahedron(int level);

// Keeps only view vertices with z >= 0. Used for objects never seen from
// below; off by default.
ViewpointSphere upper_hemisphere(const ViewpointSphere& sphere);

// Rotation taking the canonical view axis (+Z) onto `vertex`, composed with
// an in-plane rotation about that axis. Frame convention: world +Z is the
// up reference; within 1e-3 of the poles the frame anchors to +X instead,
// which makes the canonical view (vertex = +Z, angle = 0) the identity.
Eigen::Quaterniond viewpoint_rotation(const Eigen::Vector3d& vertex, double inplane_angle);

// Camera distances whose reciprocals are evenly spaced, so projected size
// shrinks by the same pixel increment from one level to the next.
// Requires 0 < d_near < d_far and num_levels >= 2.
std::vector<double> scale_distances(double d_near, double d_far, int num_levels);

}  // namespace synthgen
