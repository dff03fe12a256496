#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hullkit/geometry.hpp"

namespace hullkit {

// Requested number of characteristic points.
enum class BoxMode : int { kQuad = 4, kHex = 6, kOct = 8 };

// Throws HullError(kInvalidArgument) for anything but 4, 6 or 8.
BoxMode BoxModeFromInt(int corners);

inline int CornerCount(BoxMode mode) noexcept { return static_cast<int>(mode); }

// The pruning polygon. `corners` holds distinct input indices in CCW order
// after coincident extremes and non-left turns are collapsed away.
struct BoxSpec {
  BoxMode mode = BoxMode::kOct;
  std::vector<PointIndex> corners;

  std::size_t p() const noexcept { return corners.size(); }
};

struct KeptPoint {
  PointIndex index;
  std::size_t side;

  friend bool operator==(const KeptPoint&, const KeptPoint&) = default;
};

struct FilterResult {
  std::vector<KeptPoint> kept;  // in input order

  std::size_t n_prime() const noexcept { return kept.size(); }
};

// Picks the directional extremes in CCW order of direction:
//   Oct:  min y, max(x-y), max x, max(x+y), max y, min(x-y), min x, min(x+y)
//   Hex:  min y, max x, max(x+y), max y, min x, min(x+y)
//   Quad: min y, max x, max y, min x
// When several points share the optimum, only the two ends of that extreme
// edge are eligible and the one with the lower index wins, so every corner is
// a vertex of the strict hull. The sequence is then cyclically deduplicated
// and corners without a strict left turn are removed until stable.
// Throws HullError(kEmptyInput) for an empty set.
BoxSpec FindExtremes(std::span<const Point> points, BoxMode mode);

// Keeps the points strictly outside the box, tagged with the box side
// (corners[j] -> corners[j+1]) they are right of. Corners and points on the
// boundary are discarded. With p == 1 nothing is kept.
FilterResult FilterInterior(std::span<const Point> points, const BoxSpec& box);

// Classifies one point against the box; nullopt means inside or on it.
std::optional<std::size_t> OutsideSide(std::span<const Point> points,
                                       const BoxSpec& box, const Point& q,
                                       CountingOrient& orient);

}  // namespace hullkit
