#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hullkit/akl_toussaint.hpp"
#include "hullkit/geometry.hpp"
#include "hullkit/hull.hpp"

namespace hullkit {

struct BucketOptions {
  bool triangle_filter = true;
  bool midpoint_split = true;
  bool prealloc_hint = true;
};

struct FarPoint {
  PointIndex index;
  Point point;
  double distance;  // |Cross(corner_lo, corner_hi, point)|
};

struct SideBucket {
  std::size_t side = 0;
  std::vector<PointIndex> members;
  std::optional<FarPoint> far_point;
};

enum class Admission { kAdmit, kDiscard };

// Discards `q` when it is strictly inside the triangle formed by the side's
// corners and the farthest point admitted so far; otherwise admits it and
// promotes it to far point if it is farther. Does not append to members.
Admission TriangleFilterAdmit(SideBucket& bucket, PointIndex index,
                              const Point& q, const Point& corner_lo,
                              const Point& corner_hi, CountingOrient& orient);

// Vertices of hull(members + corners) strictly between corner_lo and
// corner_hi, in CCW order. Members must be strictly right of lo -> hi.
std::vector<PointIndex> BucketChain(std::span<const Point> points,
                                    std::span<const PointIndex> members,
                                    PointIndex corner_lo, PointIndex corner_hi,
                                    CountingOrient& orient);

// Reorders members so the half nearer corner_lo (split at the perpendicular
// through the side midpoint) comes first.
void MidpointSplit(std::span<const Point> points,
                   std::vector<PointIndex>& members, const Point& corner_lo,
                   const Point& corner_hi);

// Dispatches outside points into one bucket per box side, hulls each bucket
// with a monotone chain and concatenates corner j + chain j.
// Throws HullError(kEmptyInput).
HullResult BuildBucketed(std::span<const Point> points, BoxMode mode,
                         BucketOptions opts = {});

}  // namespace hullkit
