#pragma once

// Search and splice steps shared by the two anchored hull storages. A side
// view exposes vertices at(0) .. at(segments()) where at(0) and
// at(segments()) are the two box corners bounding the side.

#include <cstddef>
#include <optional>
#include <utility>

#include "hullkit/geometry.hpp"

namespace hullkit::detail {

template <typename View>
std::optional<std::size_t> LocateLinear(const View& view, const Point& q,
                                        CountingOrient& orient) {
  const std::size_t m = view.segments();
  for (std::size_t k = 0; k < m; ++k) {
    if (orient(view.at(k), view.at(k + 1), q) == Orientation::kRight) return k;
  }
  return std::nullopt;
}

// Seen from the midpoint of the box side, the chain vertices sweep half a
// turn in CCW order and q (strictly outside the side) lies inside that sweep.
// Binary search for the wedge containing q; the chain edge closing that wedge
// is the one the ray towards q leaves the hull through, if it leaves at all.
template <typename View>
std::optional<std::size_t> LocateDichotomy(const View& view, const Point& q,
                                           CountingOrient& orient) {
  const std::size_t m = view.segments();
  if (m <= 2) return LocateLinear(view, q, orient);
  const Point& a = view.at(0);
  const Point& b = view.at(m);
  const Point mid{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};

  std::size_t lo = 0;
  std::size_t hi = m;
  while (hi - lo > 1) {
    const std::size_t c = lo + (hi - lo) / 2;
    if (orient(mid, view.at(c), q) == Orientation::kLeft) {
      lo = c;
    } else {
      hi = c;
    }
  }
  // A ray through a vertex, or rounding in `mid`, can put the exit edge one
  // wedge away.
  const std::size_t candidates[] = {lo, lo == 0 ? m : lo - 1, lo + 1};
  for (std::size_t k : candidates) {
    if (k >= m) continue;
    if (orient(view.at(k), view.at(k + 1), q) == Orientation::kRight) return k;
  }
  return std::nullopt;
}

// With q strictly right of segment `at`, returns the local positions (lo, hi)
// of the vertices that stay on either side of q: everything strictly between
// them becomes concave and is dropped. Never moves past the two corners.
template <typename View>
std::pair<std::size_t, std::size_t> SpliceRange(const View& view,
                                                std::size_t at, const Point& q,
                                                CountingOrient& orient) {
  const std::size_t m = view.segments();
  std::size_t lo = at;
  while (lo > 0 &&
         orient(view.at(lo - 1), view.at(lo), q) != Orientation::kLeft) {
    --lo;
  }
  std::size_t hi = at + 1;
  while (hi < m &&
         orient(q, view.at(hi), view.at(hi + 1)) != Orientation::kLeft) {
    ++hi;
  }
  return {lo, hi};
}

}  // namespace hullkit::detail
