#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "synthgen/image.hpp"

namespace synthgen {

// Phong reflectance coefficients. MTL colors are collapsed to scalars.
struct PhongMaterial {
  double ambient = 0.35;
  double diffuse = 0.9;
  double specular = 0.25;
  double shininess = 16.0;
};

// Triangle mesh with per-vertex normals and texture coordinates. Vertex,
// normal and UV arrays are index-aligned; faces index all three at once.
struct TexturedMesh {
  std::string name;
  std::vector<Eigen::Vector3d> vertices;
  std::vector<Eigen::Vector3d> normals;
  std::vector<Eigen::Vector2d> uvs;       // in [0,1]^2
  std::vector<Eigen::Vector3i> triangles;
  Image texture;                          // RGB
  PhongMaterial material;
};

// Area-weighted vertex normals from face geometry. Zero-area faces
// contribute nothing; isolated vertices get +Z.
std::vector<Eigen::Vector3d> compute_vertex_normals(
    const std::vector<Eigen::Vector3d>& vertices,
    const std::vector<Eigen::Vector3i>& triangles);

// De-means the vertices and scales so the farthest vertex sits exactly on
// the unit sphere. Topology, UVs and texture are untouched.
// Throws ZeroExtentError when all vertices coincide.
TexturedMesh normalize_mesh(const TexturedMesh& mesh);

}  // namespace synthgen
