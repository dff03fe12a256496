#include "hullkit/akl_toussaint.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "hullkit/error.hpp"

namespace hullkit {
namespace {

// Objective: maximise dx * x + dy * y. Coefficients are 0 or +-1, so the
// value is exact for x, y, x+y and x-y.
struct Direction {
  double dx;
  double dy;
};

constexpr std::array<Direction, 8> kOctDirections = {{
    {0, -1},   // min y
    {1, -1},   // max (x - y)
    {1, 0},    // max x
    {1, 1},    // max (x + y)
    {0, 1},    // max y
    {-1, 1},   // min (x - y)
    {-1, 0},   // min x
    {-1, -1},  // min (x + y)
}};

constexpr std::array<Direction, 6> kHexDirections = {{
    {0, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1},
}};

constexpr std::array<Direction, 4> kQuadDirections = {{
    {0, -1}, {1, 0}, {0, 1}, {-1, 0},
}};

std::span<const Direction> DirectionsFor(BoxMode mode) {
  switch (mode) {
    case BoxMode::kQuad:
      return kQuadDirections;
    case BoxMode::kHex:
      return kHexDirections;
    case BoxMode::kOct:
      return kOctDirections;
  }
  return kOctDirections;
}

struct Extreme {
  double best;
  PointIndex lex_min;
  PointIndex lex_max;
};

// Removes cyclically repeated neighbours and then one non-left corner per
// round until the polygon is strictly convex or has fewer than three corners.
void Collapse(std::span<const Point> points, std::vector<PointIndex>& c) {
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<PointIndex> dedup;
    dedup.reserve(c.size());
    for (PointIndex i : c) {
      if (dedup.empty() || dedup.back() != i) dedup.push_back(i);
    }
    while (dedup.size() > 1 && dedup.back() == dedup.front()) dedup.pop_back();
    if (dedup.size() != c.size()) changed = true;
    c = std::move(dedup);

    if (c.size() < 3) continue;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point& prev = points[c[(i + n - 1) % n]];
      const Point& cur = points[c[i]];
      const Point& next = points[c[(i + 1) % n]];
      if (Orient(prev, cur, next) != Orientation::kLeft) {
        c.erase(c.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
}

}  // namespace

BoxMode BoxModeFromInt(int corners) {
  switch (corners) {
    case 4:
      return BoxMode::kQuad;
    case 6:
      return BoxMode::kHex;
    case 8:
      return BoxMode::kOct;
    default:
      throw HullError(ErrorCode::kInvalidArgument,
                      "box mode must be 4, 6 or 8, got " +
                          std::to_string(corners));
  }
}

BoxSpec FindExtremes(std::span<const Point> points, BoxMode mode) {
  if (points.empty()) {
    throw HullError(ErrorCode::kEmptyInput, "FindExtremes: empty point set");
  }
  const auto dirs = DirectionsFor(mode);
  std::array<Extreme, 8> ext{};
  for (std::size_t d = 0; d < dirs.size(); ++d) {
    ext[d] = {dirs[d].dx * points[0].x + dirs[d].dy * points[0].y, 0, 0};
  }
  for (PointIndex i = 1; i < points.size(); ++i) {
    const Point& q = points[i];
    for (std::size_t d = 0; d < dirs.size(); ++d) {
      const double v = dirs[d].dx * q.x + dirs[d].dy * q.y;
      Extreme& e = ext[d];
      if (v > e.best) {
        e = {v, i, i};
      } else if (v == e.best) {
        // Tied points lie on one extreme edge; only its ends are vertices.
        if (LexLess(q, points[e.lex_min])) e.lex_min = i;
        if (LexLess(points[e.lex_max], q)) e.lex_max = i;
      }
    }
  }

  BoxSpec box;
  box.mode = mode;
  box.corners.reserve(dirs.size());
  for (std::size_t d = 0; d < dirs.size(); ++d) {
    box.corners.push_back(std::min(ext[d].lex_min, ext[d].lex_max));
  }
  Collapse(points, box.corners);
  return box;
}

std::optional<std::size_t> OutsideSide(std::span<const Point> points,
                                       const BoxSpec& box, const Point& q,
                                       CountingOrient& orient) {
  const std::size_t p = box.corners.size();
  if (p < 2) return std::nullopt;
  for (std::size_t j = 0; j < p; ++j) {
    const Point& a = points[box.corners[j]];
    const Point& b = points[box.corners[j + 1 == p ? 0 : j + 1]];
    if (orient(a, b, q) == Orientation::kRight) return j;
  }
  return std::nullopt;
}

FilterResult FilterInterior(std::span<const Point> points,
                            const BoxSpec& box) {
  FilterResult result;
  CountingOrient orient;
  for (PointIndex i = 0; i < points.size(); ++i) {
    // Corners test as on-boundary, so they never reach `kept`.
    if (auto side = OutsideSide(points, box, points[i], orient)) {
      result.kept.push_back({i, *side});
    }
  }
  return result;
}

}  // namespace hullkit
