#include "hullkit/hull.hpp"

#include <algorithm>
#include <unordered_set>

#include "hullkit/error.hpp"

namespace hullkit {

bool IsStrictlyConvex(std::span<const Point> points,
                      std::span<const PointIndex> cycle) {
  const std::size_t h = cycle.size();
  if (h == 2) return !(points[cycle[0]] == points[cycle[1]]);
  if (h < 3) return true;
  for (std::size_t i = 0; i < h; ++i) {
    const Point& a = points[cycle[i]];
    const Point& b = points[cycle[(i + 1) % h]];
    const Point& c = points[cycle[(i + 2) % h]];
    if (Orient(a, b, c) != Orientation::kLeft) return false;
  }
  return true;
}

bool ContainsAll(std::span<const Point> points,
                 std::span<const PointIndex> cycle) {
  const std::size_t h = cycle.size();
  if (h == 0) return points.empty();
  if (h == 1) {
    const Point& v = points[cycle[0]];
    return std::all_of(points.begin(), points.end(),
                       [&](const Point& q) { return q == v; });
  }
  for (const Point& q : points) {
    for (std::size_t i = 0; i < h; ++i) {
      const Point& a = points[cycle[i]];
      const Point& b = points[cycle[(i + 1) % h]];
      if (Orient(a, b, q) == Orientation::kRight) return false;
    }
    if (h == 2) {
      // Both directed edges tolerate collinear points; also bound along the
      // segment.
      const Point& a = points[cycle[0]];
      const Point& b = points[cycle[1]];
      const double t = (q.x - a.x) * (b.x - a.x) + (q.y - a.y) * (b.y - a.y);
      const double len = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
      if (t < 0.0 || t > len) return false;
    }
  }
  return true;
}

HullIndices Canonicalize(std::span<const Point> points, HullIndices cycle) {
  if (cycle.empty()) return cycle;
  std::unordered_set<PointIndex> seen(cycle.begin(), cycle.end());
  if (seen.size() != cycle.size()) {
    throw HullError(ErrorCode::kNotConvex, "Canonicalize: repeated index");
  }
  if (!IsStrictlyConvex(points, cycle)) {
    throw HullError(ErrorCode::kNotConvex,
                    "Canonicalize: cycle is not strictly convex");
  }
  auto first = std::min_element(
      cycle.begin(), cycle.end(), [&](PointIndex a, PointIndex b) {
        const Point& pa = points[a];
        const Point& pb = points[b];
        if (LexLess(pa, pb)) return true;
        if (LexLess(pb, pa)) return false;
        return a < b;
      });
  std::rotate(cycle.begin(), first, cycle.end());
  return cycle;
}

}  // namespace hullkit
