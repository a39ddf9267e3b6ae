#pragma once

#include <stdexcept>
#include <string>

namespace synthgen {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A required file or directory does not exist or cannot be opened.
struct FileError : Error {
  explicit FileError(const std::string& what) : Error(what) {}
};

// Geometry that cannot be interpreted: bad indices, empty faces, missing
// attributes. The message names the offending element.
struct MeshFormatError : Error {
  explicit MeshFormatError(const std::string& what) : Error(what) {}
};

// A mesh references a texture that is absent or unreadable.
struct MissingTextureError : Error {
  explicit MissingTextureError(const std::string& what) : Error(what) {}
};

// All vertices coincide; the mesh cannot be scaled to the unit sphere.
struct ZeroExtentError : Error {
  explicit ZeroExtentError(const std::string& what) : Error(what) {}
};

// A vertex landed at or behind the camera plane during projection.
struct BehindCameraError : Error {
  explicit BehindCameraError(const std::string& what) : Error(what) {}
};

// Invalid configuration value or violated operation precondition.
struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(what) {}
};

// Scene composition could not terminate within its placement budget.
struct CompositionError : Error {
  explicit CompositionError(const std::string& what) : Error(what) {}
};

// Requested parameter would exhaust memory or time (e.g. subdivision depth).
struct ResourceBoundError : Error {
  explicit ResourceBoundError(const std::string& what) : Error(what) {}
};

// I/O failure while writing dataset output; message carries the path.
struct IoError : Error {
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace synthgen
