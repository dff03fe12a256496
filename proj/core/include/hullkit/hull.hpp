#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hullkit/geometry.hpp"

namespace hullkit {

// CCW cycle of input-point indices forming a strictly convex hull. After
// Canonicalize the cycle starts at its (x, y)-lexicographically smallest
// vertex, so two algorithms agree exactly iff their cycles compare equal.
using HullIndices = std::vector<PointIndex>;

struct BuildStats {
  std::uint64_t n_prime_seen = 0;     // points found outside the pruning box
  std::uint64_t max_temp_hull = 0;    // largest working hull observed
  std::uint64_t orientation_calls = 0;
  std::uint64_t box_corners = 0;      // p, when a box was used
};

struct HullResult {
  HullIndices hull;
  BuildStats stats;
};

// Rotates `cycle` to start at the lexicographically smallest point (ties by
// smallest index). Throws HullError(kNotConvex) if the cycle has a repeated
// index or, for three or more vertices, a non-left turn.
HullIndices Canonicalize(std::span<const Point> points, HullIndices cycle);

// True if every cyclic triple of `cycle` turns strictly left (vacuous for
// fewer than three vertices, which must then be distinct points).
bool IsStrictlyConvex(std::span<const Point> points,
                      std::span<const PointIndex> cycle);

// True if no point of `points` lies strictly outside `cycle`.
bool ContainsAll(std::span<const Point> points,
                 std::span<const PointIndex> cycle);

}  // namespace hullkit
