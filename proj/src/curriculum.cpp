#include "synthgen/curriculum.hpp"

namespace synthgen {

ScheduleItem schedule_item(const CurriculumCursor& cursor) {
  return ScheduleItem{cursor.object_index, cursor.scale_index, cursor.view_index,
                      cursor.inplane_index};
}

CurriculumCursor advance(const CurriculumCursor& cursor, int num_objects,
                         const PoseSpace& space) {
  CurriculumCursor c = cursor;
  if (++c.object_index < num_objects) return c;
  c.object_index = 0;
  if (++c.inplane_index < space.inplane_steps) return c;
  c.inplane_index = 0;
  if (++c.view_index < space.num_views()) return c;
  c.view_index = 0;
  if (++c.scale_index < space.num_scales()) return c;
  c.scale_index = 0;
  ++c.epoch;
  return c;
}

std::pair<ScheduleItem, CurriculumCursor> next(const CurriculumCursor& cursor,
                                               int num_objects, const PoseSpace& space) {
  return {schedule_item(cursor), advance(cursor, num_objects, space)};
}

ScheduleItem random_item(RngStream& rng, int num_objects, const PoseSpace& space) {
  ScheduleItem item;
  item.object_id = rng.uniform_int(num_objects);
  item.view_index = rng.uniform_int(space.num_views());
  item.inplane_index = rng.uniform_int(space.inplane_steps);
  item.scale_index = rng.uniform_int(space.num_scales());
  return item;
}

}  // namespace synthgen
