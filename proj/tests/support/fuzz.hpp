#pragma once

// Fuzz instances for differential tests. Integer-grid sets keep every
// predicate exact, which makes ties (duplicates, collinear runs, points on
// box edges) common rather than accidental.

#include <cstdint>
#include <string>

#include "hullkit/datagen.hpp"
#include "hullkit/geometry.hpp"

namespace hullkit::testing {

struct FuzzCase {
  std::string label;
  PointSet points;
};

// Copies roughly a fifth of the points to random positions of the set.
inline PointSet InjectDuplicates(PointSet pts, std::uint64_t seed) {
  if (pts.empty()) return pts;
  SplitMix64 rng(seed ^ 0xD1B54A32D192ED03ULL);
  const std::size_t extra = pts.size() / 5 + 1;
  for (std::size_t k = 0; k < extra; ++k) {
    const auto src = static_cast<std::size_t>(rng.Next() % pts.size());
    const auto dst = static_cast<std::size_t>(rng.Next() % (pts.size() + 1));
    const Point copy = pts[src];
    pts.insert(pts.begin() + static_cast<std::ptrdiff_t>(dst), copy);
  }
  return pts;
}

inline PointSet IntegerGrid(std::size_t n, int span, std::uint64_t seed) {
  SplitMix64 rng(seed);
  PointSet pts;
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back({static_cast<double>(rng.Next() % static_cast<std::uint64_t>(span)),
                   static_cast<double>(rng.Next() % static_cast<std::uint64_t>(span))});
  }
  return pts;
}

// Case k of a deterministic mix over all generators and sizes up to max_n.
inline FuzzCase MakeFuzzCase(std::size_t k, std::size_t max_n) {
  SplitMix64 rng(0x5EED0000ULL + k);
  const std::size_t n = 1 + static_cast<std::size_t>(rng.Next() % max_n);
  const std::uint64_t seed = rng.Next();
  const auto variant = k % 7;
  FuzzCase c;
  switch (variant) {
    case 0: c.points = Generate(Distribution::kSquare, n, seed); break;
    case 1: c.points = Generate(Distribution::kDisk, n, seed); break;
    case 2: c.points = Generate(Distribution::kGaussDisk, n, seed); break;
    case 3: c.points = Generate(Distribution::kCircle, n, seed); break;
    case 4: c.points = Generate(Distribution::kCollinear, n, seed); break;
    case 5: c.points = IntegerGrid(n, 2 + static_cast<int>(rng.Next() % 12), seed); break;
    default: c.points = Generate(Distribution::kSquare, n, seed); break;
  }
  if (k % 3 == 1) c.points = InjectDuplicates(std::move(c.points), seed);
  c.label = "case " + std::to_string(k) + " variant " + std::to_string(variant) +
            " n=" + std::to_string(c.points.size());
  return c;
}

}  // namespace hullkit::testing
