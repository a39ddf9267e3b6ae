#pragma once

#include "synthgen/camera.hpp"

namespace synthgen {

enum class Layer { Background, Foreground, Occluder };

// One model instance scheduled for rendering. model_index refers into the
// pool of the placement's layer (foreground models for Foreground, the
// background pool otherwise).
struct PlacedObject {
  int model_index = 0;
  Pose pose;
  double scale = 1.0;      // isotropic, applied before the pose
  double hue_shift = 0.0;  // radians; foreground keeps its original hue
  Layer layer = Layer::Foreground;
  int linked_foreground = -1;  // occluders: index into the foreground list
};

}  // namespace synthgen
