#include "synthgen/mesh.hpp"

#include "synthgen/errors.hpp"

namespace synthgen {

std::vector<Eigen::Vector3d> compute_vertex_normals(
    const std::vector<Eigen::Vector3d>& vertices,
    const std::vector<Eigen::Vector3i>& triangles) {
  std::vector<Eigen::Vector3d> normals(vertices.size(), Eigen::Vector3d::Zero());
  for (const auto& tri : triangles) {
    const Eigen::Vector3d& a = vertices[tri[0]];
    const Eigen::Vector3d& b = vertices[tri[1]];
    const Eigen::Vector3d& c = vertices[tri[2]];
    // Cross product length is twice the face area, so accumulating the raw
    // cross products weights each face by area.
    const Eigen::Vector3d fn = (b - a).cross(c - a);
    normals[tri[0]] += fn;
    normals[tri[1]] += fn;
    normals[tri[2]] += fn;
  }
  for (auto& n : normals) {
    const double len = n.norm();
    n = len > 1e-20 ? Eigen::Vector3d(n / len) : Eigen::Vector3d::UnitZ();
  }
  return normals;
}

TexturedMesh normalize_mesh(const TexturedMesh& mesh) {
  if (mesh.vertices.empty()) throw ZeroExtentError("mesh '" + mesh.name + "' has no vertices");
  Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
  for (const auto& v : mesh.vertices) centroid += v;
  centroid /= static_cast<double>(mesh.vertices.size());

  double max_norm = 0.0;
  for (const auto& v : mesh.vertices) max_norm = std::max(max_norm, (v - centroid).norm());
  if (max_norm < 1e-12)
    throw ZeroExtentError("mesh '" + mesh.name + "' has zero extent: all vertices coincide");

  TexturedMesh out = mesh;
  const double inv = 1.0 / max_norm;
  for (auto& v : out.vertices) v = (v - centroid) * inv;
  return out;
}

}  // namespace synthgen
