#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "hullkit/geometry.hpp"

namespace hullkit {

enum class Distribution { kSquare, kDisk, kGaussDisk, kCircle, kCollinear };

// CLI names: square, disk, gauss, circle, collinear.
std::string_view ToString(Distribution dist);
std::optional<Distribution> ParseDistribution(std::string_view name);

// SplitMix64 stream. Version 1 of the generator contract:
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
// Uniform doubles take the top 53 bits: (z >> 11) * 2^-53, in [0, 1).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t Next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double Uniform() noexcept {
    return static_cast<double>(Next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// Deterministic synthetic point sets:
//   square    uniform on [0,1)^2
//   disk      uniform on the unit disk, by rejection from [-1,1)^2
//   gauss     N(0, 1/16) per axis (Box-Muller), rejected outside the unit disk
//   circle    point k at angle 2*pi*k/n + u*1e-3*(2*pi/n) on the unit circle
//   collinear (t, t) with t uniform on [0,1)
PointSet Generate(Distribution dist, std::size_t n, std::uint64_t seed);

}  // namespace hullkit
