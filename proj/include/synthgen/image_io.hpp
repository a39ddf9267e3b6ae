#pragma once

#include <string>

#include "synthgen/image.hpp"

namespace synthgen {

// Loads a PNG or JPEG file as 8-bit RGB. Throws FileError / IoError.
Image load_image(const std::string& path);

// Writes 8-bit RGB as PNG with fixed encoder settings, so identical pixels
// always produce identical bytes. Throws IoError with the path on failure.
void write_png(const std::string& path, const Image& img);

}  // namespace synthgen
