#include "synthgen/obj_loader.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "synthgen/errors.hpp"
#include "synthgen/image_io.hpp"

namespace synthgen {

namespace fs = std::filesystem;

namespace {

struct MtlEntry {
  std::string texture_path;  // resolved against the .mtl directory
  PhongMaterial material;
  bool has_texture = false;
};

double mean3(std::istringstream& ss) {
  double r = 0, g = 0, b = 0;
  ss >> r >> g >> b;
  return (r + g + b) / 3.0;
}

std::map<std::string, MtlEntry> parse_mtl(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open material file: " + path.string());
  std::map<std::string, MtlEntry> mtls;
  std::string line, current;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string key;
    if (!(ss >> key) || key[0] == '#') continue;
    if (key == "newmtl") {
      ss >> current;
      mtls[current] = MtlEntry{};
    } else if (!current.empty()) {
      auto& m = mtls[current];
      if (key == "map_Kd") {
        std::string rest;
        std::getline(ss, rest);
        const auto start = rest.find_first_not_of(" \t");
        if (start != std::string::npos) {
          m.texture_path = (path.parent_path() / rest.substr(start)).string();
          m.has_texture = true;
        }
      } else if (key == "Ka") {
        m.material.ambient = mean3(ss);
      } else if (key == "Kd") {
        m.material.diffuse = mean3(ss);
      } else if (key == "Ks") {
        m.material.specular = mean3(ss);
      } else if (key == "Ns") {
        ss >> m.material.shininess;
      }
    }
  }
  return mtls;
}

// One OBJ corner reference "v/vt/vn" with 0-based resolved indices (-1 absent).
struct Corner {
  int v = -1, vt = -1, vn = -1;
  bool operator<(const Corner& o) const {
    return std::tie(v, vt, vn) < std::tie(o.v, o.vt, o.vn);
  }
};

int resolve_index(int raw, std::size_t count, const std::string& what, int line_no) {
  // OBJ indices are 1-based; negative values count back from the end.
  const int idx = raw > 0 ? raw - 1 : static_cast<int>(count) + raw;
  if (idx < 0 || idx >= static_cast<int>(count))
    throw MeshFormatError("face at line " + std::to_string(line_no) + " references " + what +
                          " " + std::to_string(raw) + " but only " + std::to_string(count) +
                          " are defined");
  return idx;
}

Corner parse_corner(const std::string& token, std::size_t nv, std::size_t nt, std::size_t nn,
                    int line_no) {
  Corner c;
  int part = 0;
  std::size_t pos = 0;
  while (pos <= token.size() && part < 3) {
    const std::size_t slash = token.find('/', pos);
    const std::string field =
        token.substr(pos, (slash == std::string::npos ? token.size() : slash) - pos);
    if (!field.empty()) {
      int raw = 0;
      try {
        raw = std::stoi(field);
      } catch (...) {
        throw MeshFormatError("malformed face token '" + token + "' at line " +
                              std::to_string(line_no));
      }
      if (part == 0) c.v = resolve_index(raw, nv, "vertex", line_no);
      if (part == 1) c.vt = resolve_index(raw, nt, "texture coordinate", line_no);
      if (part == 2) c.vn = resolve_index(raw, nn, "normal", line_no);
    }
    if (slash == std::string::npos) break;
    pos = slash + 1;
    ++part;
  }
  if (c.v < 0)
    throw MeshFormatError("face token '" + token + "' at line " + std::to_string(line_no) +
                          " has no vertex index");
  return c;
}

}  // namespace

TexturedMesh load_mesh(const std::string& path_str) {
  const fs::path path(path_str);
  std::ifstream in(path);
  if (!in) throw FileError("cannot open mesh file: " + path_str);

  std::vector<Eigen::Vector3d> positions;
  std::vector<Eigen::Vector2d> texcoords;
  std::vector<Eigen::Vector3d> file_normals;
  std::vector<std::array<Corner, 3>> faces;
  std::map<std::string, MtlEntry> mtls;
  std::string active_mtl;
  std::string first_used_mtl;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string key;
    if (!(ss >> key) || key[0] == '#') continue;
    if (key == "v") {
      Eigen::Vector3d p;
      if (!(ss >> p.x() >> p.y() >> p.z()))
        throw MeshFormatError("malformed vertex at line " + std::to_string(line_no) + " of " +
                              path_str);
      positions.push_back(p);
    } else if (key == "vt") {
      Eigen::Vector2d t;
      if (!(ss >> t.x() >> t.y()))
        throw MeshFormatError("malformed texture coordinate at line " +
                              std::to_string(line_no) + " of " + path_str);
      texcoords.push_back(t);
    } else if (key == "vn") {
      Eigen::Vector3d n;
      if (!(ss >> n.x() >> n.y() >> n.z()))
        throw MeshFormatError("malformed normal at line " + std::to_string(line_no) + " of " +
                              path_str);
      file_normals.push_back(n);
    } else if (key == "f") {
      std::vector<Corner> poly;
      std::string token;
      while (ss >> token)
        poly.push_back(parse_corner(token, positions.size(), texcoords.size(),
                                    file_normals.size(), line_no));
      if (poly.size() < 3)
        throw MeshFormatError("face with fewer than 3 vertices at line " +
                              std::to_string(line_no) + " of " + path_str);
      for (std::size_t i = 1; i + 1 < poly.size(); ++i)
        faces.push_back({poly[0], poly[i], poly[i + 1]});
    } else if (key == "mtllib") {
      std::string rest;
      std::getline(ss, rest);
      const auto start = rest.find_first_not_of(" \t");
      if (start != std::string::npos) {
        auto parsed = parse_mtl(path.parent_path() / rest.substr(start));
        mtls.insert(parsed.begin(), parsed.end());
      }
    } else if (key == "usemtl") {
      ss >> active_mtl;
      if (first_used_mtl.empty()) first_used_mtl = active_mtl;
    }
  }

  if (positions.empty()) throw MeshFormatError("mesh file has no vertices: " + path_str);
  if (faces.empty()) throw MeshFormatError("mesh file has no faces: " + path_str);
  if (texcoords.empty())
    throw MeshFormatError("mesh file has no texture coordinates (vt): " + path_str);

  TexturedMesh mesh;
  mesh.name = path.stem().string();

  // Collapse OBJ's three index spaces into one.
  std::map<Corner, int> remap;
  const bool have_normals = !file_normals.empty();
  for (const auto& face : faces) {
    Eigen::Vector3i tri;
    for (int k = 0; k < 3; ++k) {
      const Corner& c = face[k];
      auto [it, inserted] = remap.try_emplace(c, static_cast<int>(mesh.vertices.size()));
      if (inserted) {
        mesh.vertices.push_back(positions[c.v]);
        if (c.vt < 0)
          throw MeshFormatError("face corner without texture coordinate in " + path_str);
        mesh.uvs.push_back(texcoords[c.vt]);
        if (have_normals && c.vn >= 0) mesh.normals.push_back(file_normals[c.vn].normalized());
      }
      tri[k] = it->second;
    }
    mesh.triangles.push_back(tri);
  }
  if (mesh.normals.size() != mesh.vertices.size())
    mesh.normals = compute_vertex_normals(mesh.vertices, mesh.triangles);

  const std::string mtl_name = first_used_mtl.empty() && !mtls.empty()
                                   ? mtls.begin()->first
                                   : first_used_mtl;
  const auto it = mtls.find(mtl_name);
  if (it == mtls.end())
    throw MissingTextureError("mesh '" + mesh.name + "' (" + path_str +
                              ") has no material with a diffuse texture");
  if (!it->second.has_texture)
    throw MissingTextureError("material '" + mtl_name + "' of mesh '" + mesh.name +
                              "' has no map_Kd texture");
  try {
    mesh.texture = load_image(it->second.texture_path);
  } catch (const Error& e) {
    throw MissingTextureError("texture of mesh '" + mesh.name +
                              "' could not be loaded: " + e.what());
  }
  mesh.material = it->second.material;
  return mesh;
}

std::vector<TexturedMesh> load_model_directory(const std::string& dir) {
  if (!fs::is_directory(dir)) throw FileError("model directory does not exist: " + dir);
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".obj")
      paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  if (paths.empty()) throw FileError("no .obj models found in " + dir);
  std::vector<TexturedMesh> models;
  models.reserve(paths.size());
  for (const auto& p : paths) models.push_back(normalize_mesh(load_mesh(p.string())));
  return models;
}

}  // namespace synthgen
