#include "hullkit/at_incremental.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "hullkit/error.hpp"
#include "side_chain.hpp"

namespace hullkit {
namespace {

void RequireSide(std::size_t side, std::size_t sides) {
  if (side >= sides) {
    throw HullError(ErrorCode::kBadSide, "side " + std::to_string(side) +
                                             " out of range for " +
                                             std::to_string(sides) + " sides");
  }
}

void RequireBox(const BoxSpec& box) {
  if (box.p() < 2) {
    throw HullError(ErrorCode::kInvalidArgument,
                    "anchored hull needs at least two box corners");
  }
}

// Side j of the contiguous array: positions [begin, end], where end may equal
// the array size and then refers to position 0.
class ArraySideView {
 public:
  ArraySideView(std::span<const Point> points,
                std::span<const PointIndex> vertices, std::size_t begin,
                std::size_t end)
      : points_(points), vertices_(vertices), begin_(begin), end_(end) {}

  std::size_t segments() const noexcept { return end_ - begin_; }
  const Point& at(std::size_t k) const noexcept {
    const std::size_t pos = begin_ + k;
    return points_[vertices_[pos == vertices_.size() ? 0 : pos]];
  }

 private:
  std::span<const Point> points_;
  std::span<const PointIndex> vertices_;
  std::size_t begin_;
  std::size_t end_;
};

class BufferSideView {
 public:
  BufferSideView(std::span<const Point> points, PointIndex lo,
                 std::span<const PointIndex> chain, PointIndex hi)
      : points_(points), lo_(lo), chain_(chain), hi_(hi) {}

  std::size_t segments() const noexcept { return chain_.size() + 1; }
  const Point& at(std::size_t k) const noexcept {
    if (k == 0) return points_[lo_];
    if (k > chain_.size()) return points_[hi_];
    return points_[chain_[k - 1]];
  }

 private:
  std::span<const Point> points_;
  PointIndex lo_;
  std::span<const PointIndex> chain_;
  PointIndex hi_;
};

template <typename View>
std::optional<std::size_t> LocateIn(const View& view, const Point& q,
                                    SearchStrategy strategy,
                                    CountingOrient& orient) {
  return strategy == SearchStrategy::kDichotomy
             ? detail::LocateDichotomy(view, q, orient)
             : detail::LocateLinear(view, q, orient);
}

}  // namespace

AnchoredHull::AnchoredHull(std::span<const Point> points, const BoxSpec& box)
    : points_(points), vertices_(box.corners) {
  RequireBox(box);
  anchors_.resize(box.p());
  for (std::size_t j = 0; j < anchors_.size(); ++j) anchors_[j] = j;
}

std::size_t AnchoredHull::SideEnd(std::size_t side) const noexcept {
  return side + 1 < anchors_.size() ? anchors_[side + 1] : vertices_.size();
}

std::optional<std::size_t> AnchoredHull::Locate(std::size_t side,
                                                const Point& q,
                                                SearchStrategy strategy,
                                                CountingOrient& orient) const {
  RequireSide(side, anchors_.size());
  const ArraySideView view(points_, vertices_, anchors_[side], SideEnd(side));
  auto local = LocateIn(view, q, strategy, orient);
  if (!local) return std::nullopt;
  return anchors_[side] + *local;
}

void AnchoredHull::Splice(std::size_t side, std::size_t at,
                          PointIndex new_index, CountingOrient& orient) {
  RequireSide(side, anchors_.size());
  const std::size_t begin = anchors_[side];
  const ArraySideView view(points_, vertices_, begin, SideEnd(side));
  assert(at >= begin && at - begin < view.segments());
  const auto [lo, hi] =
      detail::SpliceRange(view, at - begin, points_[new_index], orient);

  // Vertices at begin+lo+1 .. begin+hi-1 are replaced by the new one.
  const auto first = vertices_.begin() + static_cast<std::ptrdiff_t>(begin + lo + 1);
  const auto last = vertices_.begin() + static_cast<std::ptrdiff_t>(begin + hi);
  const std::size_t removed = hi - lo - 1;
  if (removed == 0) {
    vertices_.insert(first, new_index);
  } else {
    *first = new_index;
    vertices_.erase(first + 1, last);
  }
  const auto shift = 1 - static_cast<std::ptrdiff_t>(removed);
  for (std::size_t j = side + 1; j < anchors_.size(); ++j) {
    anchors_[j] = static_cast<std::size_t>(
        static_cast<std::ptrdiff_t>(anchors_[j]) + shift);
  }
  assert(IsStrictlyConvex(points_, vertices_));
}

SideBufferedHull::SideBufferedHull(std::span<const Point> points,
                                   const BoxSpec& box)
    : points_(points),
      corners_(box.corners),
      chains_(box.corners.size()),
      size_(box.corners.size()) {
  RequireBox(box);
}

std::optional<std::size_t> SideBufferedHull::Locate(
    std::size_t side, const Point& q, SearchStrategy strategy,
    CountingOrient& orient) const {
  RequireSide(side, corners_.size());
  const BufferSideView view(points_, corners_[side], chains_[side],
                            corners_[(side + 1) % corners_.size()]);
  return LocateIn(view, q, strategy, orient);
}

void SideBufferedHull::Splice(std::size_t side, std::size_t at,
                              PointIndex new_index, CountingOrient& orient) {
  RequireSide(side, corners_.size());
  auto& chain = chains_[side];
  const BufferSideView view(points_, corners_[side], chain,
                            corners_[(side + 1) % corners_.size()]);
  assert(at < view.segments());
  const auto [lo, hi] = detail::SpliceRange(view, at, points_[new_index], orient);

  // Local position k >= 1 is chain[k - 1].
  const auto first = chain.begin() + static_cast<std::ptrdiff_t>(lo);
  const auto last = chain.begin() + static_cast<std::ptrdiff_t>(hi - 1);
  const std::size_t removed = hi - lo - 1;
  if (removed == 0) {
    chain.insert(first, new_index);
  } else {
    *first = new_index;
    chain.erase(first + 1, last);
  }
  size_ = size_ + 1 - removed;
}

HullIndices SideBufferedHull::Cycle() const {
  HullIndices cycle;
  cycle.reserve(size_);
  for (std::size_t j = 0; j < corners_.size(); ++j) {
    cycle.push_back(corners_[j]);
    cycle.insert(cycle.end(), chains_[j].begin(), chains_[j].end());
  }
  return cycle;
}

std::optional<std::size_t> LocateInsertion(const AnchoredHull& hull,
                                           std::size_t side, const Point& q,
                                           SearchStrategy strategy) {
  CountingOrient orient;
  return hull.Locate(side, q, strategy, orient);
}

void SpliceVertex(AnchoredHull& hull, std::size_t side, std::size_t at,
                  PointIndex new_index) {
  CountingOrient orient;
  hull.Splice(side, at, new_index, orient);
}

namespace {

template <typename Hull>
void Scan(std::span<const Point> points, const BoxSpec& box, Hull& hull,
          SearchStrategy strategy, CountingOrient& orient, BuildStats& stats) {
  for (PointIndex i = 0; i < points.size(); ++i) {
    const Point& q = points[i];
    const auto side = OutsideSide(points, box, q, orient);
    if (!side) continue;
    ++stats.n_prime_seen;
    const auto at = hull.Locate(*side, q, strategy, orient);
    if (!at) continue;
    hull.Splice(*side, *at, i, orient);
    stats.max_temp_hull = std::max<std::uint64_t>(stats.max_temp_hull, hull.size());
  }
}

}  // namespace

HullResult BuildAtIncremental(std::span<const Point> points, BoxMode mode,
                              AtOptions opts) {
  if (points.empty()) {
    throw HullError(ErrorCode::kEmptyInput, "BuildAtIncremental: empty input");
  }
  const BoxSpec box = FindExtremes(points, mode);
  HullResult result;
  result.stats.box_corners = box.p();
  result.stats.max_temp_hull = box.p();

  if (box.p() < 2) {
    result.hull = box.corners;
    return result;
  }

  const SearchStrategy strategy =
      opts.dichotomy ? SearchStrategy::kDichotomy : SearchStrategy::kLinear;
  CountingOrient orient;
  HullIndices cycle;
  if (opts.side_buffers) {
    SideBufferedHull hull(points, box);
    Scan(points, box, hull, strategy, orient, result.stats);
    cycle = hull.Cycle();
  } else {
    AnchoredHull hull(points, box);
    Scan(points, box, hull, strategy, orient, result.stats);
    cycle = hull.Cycle();
  }
  result.stats.orientation_calls = orient.calls();
  result.hull = Canonicalize(points, std::move(cycle));
  return result;
}

}  // namespace hullkit
