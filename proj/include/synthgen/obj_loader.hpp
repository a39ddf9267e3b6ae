#pragma once

#include <string>
#include <vector>

#include "synthgen/mesh.hpp"

namespace synthgen {

// Loads a Wavefront OBJ with its MTL and diffuse texture (PNG or JPEG).
// Faces with more than three vertices are fan-triangulated; positions,
// normals and UVs are re-indexed into a single shared index space. Normals
// are recomputed area-weighted when the file has none.
//
// Throws FileError (missing file), MeshFormatError (bad indices, missing
// UVs, empty geometry) or MissingTextureError (no map_Kd, unreadable image),
// each naming the offending element.
TexturedMesh load_mesh(const std::string& path);

// All .obj files in a directory, sorted by filename, loaded and normalized
// to the unit sphere. Model order (and thus class ids) is the sort order.
std::vector<TexturedMesh> load_model_directory(const std::string& dir);

}  // namespace synthgen
