#include "hullkit/pure_incremental.hpp"

#include <algorithm>

#include "hullkit/error.hpp"

namespace hullkit {
namespace {

AllCollinear CollinearExtremes(std::span<const Point> points) {
  AllCollinear span;
  for (PointIndex i = 1; i < points.size(); ++i) {
    if (LexLess(points[i], points[span.first])) span.first = i;
    if (LexLess(points[span.last], points[i])) span.last = i;
  }
  return span;
}

}  // namespace

std::variant<SeedTriangle, AllCollinear> SeedTriangleFor(
    std::span<const Point> points) {
  if (points.empty()) {
    throw HullError(ErrorCode::kEmptyInput, "SeedTriangleFor: empty input");
  }
  const Point& a = points[0];
  PointIndex b = 1;
  while (b < points.size() && points[b] == a) ++b;
  if (b == points.size()) return AllCollinear{0, 0};

  for (PointIndex c = b + 1; c < points.size(); ++c) {
    const Orientation o = Orient(a, points[b], points[c]);
    if (o == Orientation::kCollinear) continue;
    SeedTriangle seed;
    seed.vertices = o == Orientation::kLeft ? std::array<PointIndex, 3>{0, b, c}
                                            : std::array<PointIndex, 3>{0, c, b};
    seed.resume = b + 1;
    return seed;
  }
  return CollinearExtremes(points);
}

HullResult BuildIncremental(std::span<const Point> points) {
  HullResult result;
  const auto seed = SeedTriangleFor(points);
  if (const auto* line = std::get_if<AllCollinear>(&seed)) {
    result.hull = line->first == line->last
                      ? HullIndices{line->first}
                      : HullIndices{line->first, line->last};
    result.hull = Canonicalize(points, std::move(result.hull));
    result.stats.max_temp_hull = result.hull.size();
    return result;
  }

  const auto& tri = std::get<SeedTriangle>(seed);
  const PointIndex skip = std::max(tri.vertices[1], tri.vertices[2]);
  std::vector<PointIndex> hull(tri.vertices.begin(), tri.vertices.end());
  CountingOrient orient;
  std::uint64_t max_temp = hull.size();

  for (PointIndex i = tri.resume; i < points.size(); ++i) {
    if (i == skip) continue;
    const Point& q = points[i];
    const ChainTest test = PointVsChain(q, points, hull, true, orient);
    if (test.inside()) continue;

    const std::size_t h = hull.size();
    auto at = [&](std::size_t k) -> const Point& { return points[hull[k % h]]; };
    std::size_t lo = *test.outside_side;  // last vertex kept before q
    std::size_t hi = (lo + 1) % h;        // first vertex kept after q
    std::size_t removed = 0;
    while (removed + 2 < h &&
           orient(at(lo + h - 1), at(lo), q) != Orientation::kLeft) {
      lo = (lo + h - 1) % h;
      ++removed;
    }
    while (removed + 2 < h &&
           orient(q, at(hi), at(hi + 1)) != Orientation::kLeft) {
      hi = (hi + 1) % h;
      ++removed;
    }

    if (lo < hi) {
      const auto first = hull.begin() + static_cast<std::ptrdiff_t>(lo + 1);
      const auto last = hull.begin() + static_cast<std::ptrdiff_t>(hi);
      if (first == last) {
        hull.insert(first, i);
      } else {
        *first = i;
        hull.erase(first + 1, last);
      }
    } else {
      // The kept run hull[hi..lo] does not wrap; q closes the cycle.
      hull.erase(hull.begin() + static_cast<std::ptrdiff_t>(lo + 1), hull.end());
      hull.erase(hull.begin(), hull.begin() + static_cast<std::ptrdiff_t>(hi));
      hull.push_back(i);
    }
    max_temp = std::max<std::uint64_t>(max_temp, hull.size());
  }

  result.stats.max_temp_hull = max_temp;
  result.stats.orientation_calls = orient.calls();
  result.hull = Canonicalize(points, std::move(hull));
  return result;
}

}  // namespace hullkit
