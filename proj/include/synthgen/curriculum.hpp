#pragma once

#include <utility>

#include "synthgen/rng.hpp"
#include "synthgen/viewsphere.hpp"

namespace synthgen {

// Position in the deterministic (scale, view, in-plane, object) schedule.
// Objects advance fastest, then in-plane angles, then out-of-plane views,
// then scales from nearest to farthest; a full pass bumps the epoch.
struct CurriculumCursor {
  int scale_index = 0;
  int view_index = 0;
  int inplane_index = 0;
  int object_index = 0;
  int epoch = 0;

  bool operator==(const CurriculumCursor&) const = default;
};

// One scheduled rendering: which object, under which pose-space indices.
struct ScheduleItem {
  int object_id = 0;
  int scale_index = 0;
  int view_index = 0;
  int inplane_index = 0;
};

// The item the cursor currently points at, without advancing.
ScheduleItem schedule_item(const CurriculumCursor& cursor);

// Cursor advanced by one step in schedule order.
CurriculumCursor advance(const CurriculumCursor& cursor, int num_objects,
                         const PoseSpace& space);

// Current item plus the advanced cursor.
std::pair<ScheduleItem, CurriculumCursor> next(const CurriculumCursor& cursor,
                                               int num_objects, const PoseSpace& space);

// Independent uniform draws over objects, views, in-plane steps and scales;
// the random-sampling counterpart of the deterministic schedule.
ScheduleItem random_item(RngStream& rng, int num_objects, const PoseSpace& space);

}  // namespace synthgen
