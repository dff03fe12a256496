#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hullkit {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

// Input points are addressed by their position in this sequence; every hull
// algorithm returns indices into it.
using PointSet = std::vector<Point>;
using PointIndex = std::size_t;

enum class Orientation { kLeft, kRight, kCollinear };

// Signed doubled area of triangle (a, b, c):
// (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x).
// Positive when c lies to the left of the directed line a -> b.
inline double Cross(const Point& a, const Point& b, const Point& c) noexcept {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline Orientation Orient(const Point& a, const Point& b,
                          const Point& c) noexcept {
  const double v = Cross(a, b, c);
  if (v > 0.0) return Orientation::kLeft;
  if (v < 0.0) return Orientation::kRight;
  return Orientation::kCollinear;
}

// (x, y) lexicographic order.
inline bool LexLess(const Point& a, const Point& b) noexcept {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// Orientation predicate that counts its invocations. Builders use it to
// report how many predicate evaluations a run needed.
class CountingOrient {
 public:
  Orientation operator()(const Point& a, const Point& b,
                         const Point& c) noexcept {
    ++calls_;
    return Orient(a, b, c);
  }

  std::uint64_t calls() const noexcept { return calls_; }
  void add(std::uint64_t n) noexcept { calls_ += n; }

 private:
  std::uint64_t calls_ = 0;
};

// Result of testing a point against a convex CCW chain. `outside_side` is the
// first segment (in scan order) that has the point strictly on its right;
// empty means the point is left of or on every segment.
struct ChainTest {
  std::optional<std::size_t> outside_side;

  bool inside() const noexcept { return !outside_side.has_value(); }
};

// Tests `p` against segments (v[k], v[k+1]) for k in [lo, hi). With `closed`
// set, the range is [lo, hi] and the segment at hi wraps to v[lo]. Collinear
// counts as inside. Throws HullError(kEmptyChain) when the range holds no
// segment.
ChainTest PointVsChain(const Point& p, std::span<const Point> vertices,
                       std::size_t lo, std::size_t hi, bool closed);

// Same test with the vertices given as indices into `points`.
ChainTest PointVsChain(const Point& p, std::span<const Point> points,
                       std::span<const PointIndex> chain, bool closed,
                       CountingOrient& orient);

// Throws HullError(kInvalidArgument) if any coordinate is NaN or infinite.
void RequireFinite(std::span<const Point> points);

}  // namespace hullkit
