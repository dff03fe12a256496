#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <variant>

#include "hullkit/geometry.hpp"
#include "hullkit/hull.hpp"

namespace hullkit {

struct SeedTriangle {
  std::array<PointIndex, 3> vertices;  // CCW
  // Scanning resumes here; points before it are duplicates of vertex 0.
  // The third seed vertex may lie at or after `resume` and must be skipped.
  std::size_t resume = 0;
};

// Every point lies on one line. `first` and `last` are the lexicographic
// extremes (equal when all points coincide).
struct AllCollinear {
  PointIndex first = 0;
  PointIndex last = 0;
};

// First three non-aligned points, oriented CCW. Throws
// HullError(kEmptyInput).
std::variant<SeedTriangle, AllCollinear> SeedTriangleFor(
    std::span<const Point> points);

// Plain incremental hull in input order, with unrestricted backward and
// forward concavity checks. stats.max_temp_hull records h'.
// Throws HullError(kEmptyInput).
HullResult BuildIncremental(std::span<const Point> points);

}  // namespace hullkit
