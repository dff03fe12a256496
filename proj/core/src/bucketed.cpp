#include "hullkit/bucketed.hpp"

#include <algorithm>
#include <cmath>

#include "hullkit/error.hpp"

namespace hullkit {

Admission TriangleFilterAdmit(SideBucket& bucket, PointIndex index,
                              const Point& q, const Point& corner_lo,
                              const Point& corner_hi, CountingOrient& orient) {
  const double dist = std::abs(Cross(corner_lo, corner_hi, q));
  if (!bucket.far_point) {
    bucket.far_point = FarPoint{index, q, dist};
    return Admission::kAdmit;
  }
  // Either winding of (lo, far, hi) is accepted; strictly inside means the
  // same non-zero turn against all three edges.
  const Point& far = bucket.far_point->point;
  const Orientation o1 = orient(corner_lo, far, q);
  if (o1 != Orientation::kCollinear) {
    const Orientation o2 = orient(far, corner_hi, q);
    if (o2 == o1 && orient(corner_hi, corner_lo, q) == o1) {
      return Admission::kDiscard;
    }
  }
  if (dist > bucket.far_point->distance) {
    bucket.far_point = FarPoint{index, q, dist};
  }
  return Admission::kAdmit;
}

std::vector<PointIndex> BucketChain(std::span<const Point> points,
                                    std::span<const PointIndex> members,
                                    PointIndex corner_lo, PointIndex corner_hi,
                                    CountingOrient& orient) {
  if (members.empty()) return {};

  std::vector<PointIndex> idx(members.begin(), members.end());
  idx.push_back(corner_lo);
  idx.push_back(corner_hi);
  std::sort(idx.begin(), idx.end(), [&](PointIndex a, PointIndex b) {
    if (LexLess(points[a], points[b])) return true;
    if (LexLess(points[b], points[a])) return false;
    return a < b;
  });
  idx.erase(std::unique(idx.begin(), idx.end(),
                        [&](PointIndex a, PointIndex b) {
                          return points[a] == points[b];
                        }),
            idx.end());

  std::vector<PointIndex> hull(2 * idx.size());
  std::size_t k = 0;
  for (PointIndex i : idx) {
    while (k >= 2 && orient(points[hull[k - 2]], points[hull[k - 1]],
                            points[i]) != Orientation::kLeft) {
      --k;
    }
    hull[k++] = i;
  }
  const std::size_t lower = k + 1;
  for (auto it = idx.rbegin() + 1; it != idx.rend(); ++it) {
    while (k >= lower && orient(points[hull[k - 2]], points[hull[k - 1]],
                                points[*it]) != Orientation::kLeft) {
      --k;
    }
    hull[k++] = *it;
  }
  hull.resize(k - 1);

  // Every member is strictly right of lo -> hi, so the CCW walk from lo
  // reaches hi after exactly the outward chain.
  const auto lo_it = std::find(hull.begin(), hull.end(), corner_lo);
  std::rotate(hull.begin(), lo_it, hull.end());
  const auto hi_it = std::find(hull.begin(), hull.end(), corner_hi);
  return {hull.begin() + 1, hi_it};
}

void MidpointSplit(std::span<const Point> points,
                   std::vector<PointIndex>& members, const Point& corner_lo,
                   const Point& corner_hi) {
  const double dx = corner_hi.x - corner_lo.x;
  const double dy = corner_hi.y - corner_lo.y;
  const double mid = 0.5 * ((corner_lo.x + corner_hi.x) * dx +
                            (corner_lo.y + corner_hi.y) * dy);
  std::partition(members.begin(), members.end(), [&](PointIndex i) {
    return points[i].x * dx + points[i].y * dy < mid;
  });
}

HullResult BuildBucketed(std::span<const Point> points, BoxMode mode,
                         BucketOptions opts) {
  if (points.empty()) {
    throw HullError(ErrorCode::kEmptyInput, "BuildBucketed: empty input");
  }
  const BoxSpec box = FindExtremes(points, mode);
  const std::size_t p = box.p();
  HullResult result;
  result.stats.box_corners = p;
  if (p < 2) {
    result.hull = box.corners;
    result.stats.max_temp_hull = p;
    return result;
  }

  std::vector<SideBucket> buckets(p);
  const std::size_t hint = static_cast<std::size_t>(
      std::ceil(2.0 * std::sqrt(static_cast<double>(points.size())) /
                static_cast<double>(p)));
  for (std::size_t j = 0; j < p; ++j) {
    buckets[j].side = j;
    if (opts.prealloc_hint) buckets[j].members.reserve(hint);
  }

  auto corner = [&](std::size_t j) -> const Point& {
    return points[box.corners[j % p]];
  };

  CountingOrient orient;
  for (PointIndex i = 0; i < points.size(); ++i) {
    const Point& q = points[i];
    const auto side = OutsideSide(points, box, q, orient);
    if (!side) continue;
    ++result.stats.n_prime_seen;
    SideBucket& bucket = buckets[*side];
    if (opts.triangle_filter &&
        TriangleFilterAdmit(bucket, i, q, corner(*side), corner(*side + 1),
                            orient) == Admission::kDiscard) {
      continue;
    }
    bucket.members.push_back(i);
  }

  HullIndices cycle;
  for (std::size_t j = 0; j < p; ++j) {
    SideBucket& bucket = buckets[j];
    if (opts.midpoint_split) {
      MidpointSplit(points, bucket.members, corner(j), corner(j + 1));
    }
    cycle.push_back(box.corners[j]);
    const auto chain = BucketChain(points, bucket.members, box.corners[j],
                                   box.corners[(j + 1) % p], orient);
    cycle.insert(cycle.end(), chain.begin(), chain.end());
  }

  result.stats.orientation_calls = orient.calls();
  result.stats.max_temp_hull = cycle.size();
  result.hull = Canonicalize(points, std::move(cycle));
  return result;
}

}  // namespace hullkit
