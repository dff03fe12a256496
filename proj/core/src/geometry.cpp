#include "hullkit/geometry.hpp"

#include <cmath>
#include <string>

#include "hullkit/error.hpp"

namespace hullkit {

ChainTest PointVsChain(const Point& p, std::span<const Point> vertices,
                       std::size_t lo, std::size_t hi, bool closed) {
  if (lo >= hi || hi >= vertices.size()) {
    throw HullError(ErrorCode::kEmptyChain, "PointVsChain: empty chain range");
  }
  for (std::size_t k = lo; k < hi; ++k) {
    if (Orient(vertices[k], vertices[k + 1], p) == Orientation::kRight) {
      return {k};
    }
  }
  if (closed && Orient(vertices[hi], vertices[lo], p) == Orientation::kRight) {
    return {hi};
  }
  return {};
}

ChainTest PointVsChain(const Point& p, std::span<const Point> points,
                       std::span<const PointIndex> chain, bool closed,
                       CountingOrient& orient) {
  if (chain.size() < 2) {
    throw HullError(ErrorCode::kEmptyChain, "PointVsChain: empty chain range");
  }
  const std::size_t last = chain.size() - 1;
  for (std::size_t k = 0; k < last; ++k) {
    if (orient(points[chain[k]], points[chain[k + 1]], p) ==
        Orientation::kRight) {
      return {k};
    }
  }
  if (closed && orient(points[chain[last]], points[chain[0]], p) ==
                    Orientation::kRight) {
    return {last};
  }
  return {};
}

void RequireFinite(std::span<const Point> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i].x) || !std::isfinite(points[i].y)) {
      throw HullError(ErrorCode::kInvalidArgument,
                      "non-finite coordinate at point " + std::to_string(i));
    }
  }
}

}  // namespace hullkit
