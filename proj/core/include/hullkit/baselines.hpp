#pragma once

#include <span>

#include "hullkit/geometry.hpp"
#include "hullkit/hull.hpp"

namespace hullkit {

// All four return the canonical strict hull. Among points with identical
// coordinates the lowest index represents them; collinear input yields its
// two extreme points and a single distinct point yields one index.
// Each throws HullError(kEmptyInput) on an empty set.

// Andrew's monotone chain. Used as the reference oracle.
HullIndices MonotoneChain(std::span<const Point> points);
HullResult MonotoneChainWithStats(std::span<const Point> points);

HullResult GrahamScan(std::span<const Point> points);
HullResult JarvisMarch(std::span<const Point> points);
HullResult Quickhull(std::span<const Point> points);

}  // namespace hullkit
