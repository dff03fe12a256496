#include "hullkit/datagen.hpp"

#include <cmath>
#include <numbers>

namespace hullkit {

std::string_view ToString(Distribution dist) {
  switch (dist) {
    case Distribution::kSquare:
      return "square";
    case Distribution::kDisk:
      return "disk";
    case Distribution::kGaussDisk:
      return "gauss";
    case Distribution::kCircle:
      return "circle";
    case Distribution::kCollinear:
      return "collinear";
  }
  return "unknown";
}

std::optional<Distribution> ParseDistribution(std::string_view name) {
  for (auto d : {Distribution::kSquare, Distribution::kDisk,
                 Distribution::kGaussDisk, Distribution::kCircle,
                 Distribution::kCollinear}) {
    if (ToString(d) == name) return d;
  }
  return std::nullopt;
}

PointSet Generate(Distribution dist, std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  PointSet points;
  points.reserve(n);
  switch (dist) {
    case Distribution::kSquare:
      for (std::size_t i = 0; i < n; ++i) {
        const double x = rng.Uniform();
        const double y = rng.Uniform();
        points.push_back({x, y});
      }
      break;
    case Distribution::kDisk:
      while (points.size() < n) {
        const double x = 2.0 * rng.Uniform() - 1.0;
        const double y = 2.0 * rng.Uniform() - 1.0;
        if (x * x + y * y <= 1.0) points.push_back({x, y});
      }
      break;
    case Distribution::kGaussDisk:
      while (points.size() < n) {
        // Box-Muller; 1 - u keeps the log argument in (0, 1].
        const double u1 = 1.0 - rng.Uniform();
        const double u2 = rng.Uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double x = 0.25 * r * std::cos(2.0 * std::numbers::pi * u2);
        const double y = 0.25 * r * std::sin(2.0 * std::numbers::pi * u2);
        if (x * x + y * y <= 1.0) points.push_back({x, y});
      }
      break;
    case Distribution::kCircle: {
      const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
      for (std::size_t k = 0; k < n; ++k) {
        const double angle =
            static_cast<double>(k) * step + rng.Uniform() * 1e-3 * step;
        points.push_back({std::cos(angle), std::sin(angle)});
      }
      break;
    }
    case Distribution::kCollinear:
      for (std::size_t i = 0; i < n; ++i) {
        const double t = rng.Uniform();
        points.push_back({t, t});
      }
      break;
  }
  return points;
}

}  // namespace hullkit
