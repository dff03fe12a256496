#include "hullkit/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "hullkit/error.hpp"

namespace hullkit {
namespace {

void RequireNonEmpty(std::span<const Point> points, const char* who) {
  if (points.empty()) {
    throw HullError(ErrorCode::kEmptyInput, std::string(who) + ": empty input");
  }
}

// Indices sorted by (x, y), one per distinct coordinate pair (the lowest).
std::vector<PointIndex> SortedDistinct(std::span<const Point> points) {
  std::vector<PointIndex> idx(points.size());
  std::iota(idx.begin(), idx.end(), PointIndex{0});
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
  return idx;
}

double SquaredDistance(const Point& a, const Point& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  return dx * dx + dy * dy;
}

HullResult Finish(std::span<const Point> points, HullIndices cycle,
                  const CountingOrient& orient) {
  HullResult result;
  result.stats.orientation_calls = orient.calls();
  result.stats.max_temp_hull = cycle.size();
  result.hull = Canonicalize(points, std::move(cycle));
  return result;
}

}  // namespace

HullResult MonotoneChainWithStats(std::span<const Point> points) {
  RequireNonEmpty(points, "MonotoneChain");
  const auto idx = SortedDistinct(points);
  CountingOrient orient;
  if (idx.size() < 3) return Finish(points, idx, orient);

  HullIndices hull(2 * idx.size());
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
  return Finish(points, std::move(hull), orient);
}

HullIndices MonotoneChain(std::span<const Point> points) {
  return MonotoneChainWithStats(points).hull;
}

HullResult GrahamScan(std::span<const Point> points) {
  RequireNonEmpty(points, "GrahamScan");
  auto idx = SortedDistinct(points);
  CountingOrient orient;
  if (idx.size() < 3) return Finish(points, idx, orient);

  auto pivot_it = std::min_element(idx.begin(), idx.end(),
                                   [&](PointIndex a, PointIndex b) {
                                     const Point& pa = points[a];
                                     const Point& pb = points[b];
                                     return pa.y < pb.y ||
                                            (pa.y == pb.y && pa.x < pb.x);
                                   });
  std::iter_swap(idx.begin(), pivot_it);
  const Point& pivot = points[idx[0]];
  std::sort(idx.begin() + 1, idx.end(), [&](PointIndex a, PointIndex b) {
    const Orientation o = orient(pivot, points[a], points[b]);
    if (o != Orientation::kCollinear) return o == Orientation::kLeft;
    return SquaredDistance(pivot, points[a]) < SquaredDistance(pivot, points[b]);
  });

  HullIndices stack;
  stack.reserve(idx.size());
  for (PointIndex i : idx) {
    while (stack.size() >= 2 &&
           orient(points[stack[stack.size() - 2]], points[stack.back()],
                  points[i]) != Orientation::kLeft) {
      stack.pop_back();
    }
    stack.push_back(i);
  }
  return Finish(points, std::move(stack), orient);
}

HullResult JarvisMarch(std::span<const Point> points) {
  RequireNonEmpty(points, "JarvisMarch");
  const auto idx = SortedDistinct(points);
  CountingOrient orient;
  if (idx.size() < 3) return Finish(points, idx, orient);

  const PointIndex start = *std::min_element(
      idx.begin(), idx.end(), [&](PointIndex a, PointIndex b) {
        const Point& pa = points[a];
        const Point& pb = points[b];
        return pa.y < pb.y || (pa.y == pb.y && pa.x < pb.x);
      });

  HullIndices hull;
  PointIndex current = start;
  do {
    hull.push_back(current);
    PointIndex next = current == idx[0] ? idx[1] : idx[0];
    for (PointIndex r : idx) {
      if (r == current) continue;
      const Orientation o = orient(points[current], points[next], points[r]);
      if (o == Orientation::kRight ||
          (o == Orientation::kCollinear &&
           SquaredDistance(points[current], points[r]) >
               SquaredDistance(points[current], points[next]))) {
        next = r;
      }
    }
    current = next;
  } while (current != start && hull.size() <= idx.size());
  return Finish(points, std::move(hull), orient);
}

namespace {

// Appends, in CCW order, the hull vertices strictly right of a -> b.
void QuickhullSide(std::span<const Point> points, PointIndex a, PointIndex b,
                   std::vector<PointIndex> candidates, CountingOrient& orient,
                   HullIndices& out) {
  if (candidates.empty()) return;
  const Point& pa = points[a];
  const Point& pb = points[b];
  // Equally far candidates form a run parallel to a -> b; only its ends are
  // strict vertices, so ties go to the one furthest along a -> b.
  const auto along = [&](const Point& q) {
    return (q.x - pa.x) * (pb.x - pa.x) + (q.y - pa.y) * (pb.y - pa.y);
  };
  PointIndex far = candidates[0];
  double far_dist = -1.0;
  for (PointIndex i : candidates) {
    const double d = -Cross(pa, pb, points[i]);
    if (d > far_dist || (d == far_dist && along(points[i]) > along(points[far]))) {
      far = i;
      far_dist = d;
    }
  }
  std::vector<PointIndex> left_part;
  std::vector<PointIndex> right_part;
  const Point& pf = points[far];
  for (PointIndex i : candidates) {
    if (i == far) continue;
    if (orient(pa, pf, points[i]) == Orientation::kRight) {
      left_part.push_back(i);
    } else if (orient(pf, pb, points[i]) == Orientation::kRight) {
      right_part.push_back(i);
    }
  }
  candidates.clear();
  candidates.shrink_to_fit();
  QuickhullSide(points, a, far, std::move(left_part), orient, out);
  out.push_back(far);
  QuickhullSide(points, far, b, std::move(right_part), orient, out);
}

}  // namespace

HullResult Quickhull(std::span<const Point> points) {
  RequireNonEmpty(points, "Quickhull");
  const auto idx = SortedDistinct(points);
  CountingOrient orient;
  if (idx.size() < 3) return Finish(points, idx, orient);

  // idx is (x, y)-sorted: front is min x (lowest y), back is max x (highest y).
  const PointIndex a = idx.front();
  const PointIndex b = idx.back();
  std::vector<PointIndex> below;
  std::vector<PointIndex> above;
  for (PointIndex i : idx) {
    if (i == a || i == b) continue;
    const Orientation o = orient(points[a], points[b], points[i]);
    if (o == Orientation::kRight) below.push_back(i);
    if (o == Orientation::kLeft) above.push_back(i);
  }
  HullIndices hull{a};
  QuickhullSide(points, a, b, std::move(below), orient, hull);
  hull.push_back(b);
  QuickhullSide(points, b, a, std::move(above), orient, hull);
  return Finish(points, std::move(hull), orient);
}

}  // namespace hullkit
