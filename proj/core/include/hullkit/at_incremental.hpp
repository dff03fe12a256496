#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hullkit/akl_toussaint.hpp"
#include "hullkit/geometry.hpp"
#include "hullkit/hull.hpp"

namespace hullkit {

enum class SearchStrategy { kLinear, kDichotomy };

struct AtOptions {
  bool dichotomy = false;     // binary search inside a side's vertex range
  bool side_buffers = false;  // one vertex array per box side

  static constexpr AtOptions Basic() { return {false, false}; }
  static constexpr AtOptions Optimised() { return {true, true}; }
};

// Working hull of the anchored incremental build, stored as one contiguous
// CCW index array. anchors()[j] is the position of box corner j; corner 0 is
// always at position 0, and side j covers positions [anchors[j],
// anchors[j+1]] with the last side wrapping back to position 0.
//
// The hull keeps a view of `points`, which must outlive it.
class AnchoredHull {
 public:
  // Requires box.p() >= 2.
  AnchoredHull(std::span<const Point> points, const BoxSpec& box);

  std::span<const PointIndex> vertices() const noexcept { return vertices_; }
  std::span<const std::size_t> anchors() const noexcept { return anchors_; }
  std::size_t side_count() const noexcept { return anchors_.size(); }
  std::size_t size() const noexcept { return vertices_.size(); }

  // Position k such that `q` is strictly right of (v[k], v[k+1]) within
  // `side`'s range, or nullopt when q is inside the working hull there.
  // Throws HullError(kBadSide).
  std::optional<std::size_t> Locate(std::size_t side, const Point& q,
                                    SearchStrategy strategy,
                                    CountingOrient& orient) const;

  // Inserts `new_index` after removing the vertices it makes concave,
  // walking back no further than anchors[side] and forward no further than
  // the next anchor. `at` must come from Locate on the same side.
  void Splice(std::size_t side, std::size_t at, PointIndex new_index,
              CountingOrient& orient);

  HullIndices Cycle() const { return vertices_; }

 private:
  std::size_t SideEnd(std::size_t side) const noexcept;

  std::span<const Point> points_;
  std::vector<PointIndex> vertices_;
  std::vector<std::size_t> anchors_;
};

// Same contract as AnchoredHull, with the vertices strictly between corner j
// and corner j+1 kept in their own array. Positions passed to Locate/Splice
// are local to the side (0 is corner j).
class SideBufferedHull {
 public:
  SideBufferedHull(std::span<const Point> points, const BoxSpec& box);

  std::size_t side_count() const noexcept { return corners_.size(); }
  std::size_t size() const noexcept { return size_; }

  std::optional<std::size_t> Locate(std::size_t side, const Point& q,
                                    SearchStrategy strategy,
                                    CountingOrient& orient) const;
  void Splice(std::size_t side, std::size_t at, PointIndex new_index,
              CountingOrient& orient);

  // Concatenation of corner j followed by side j's chain, for all j.
  HullIndices Cycle() const;

 private:
  std::span<const Point> points_;
  std::vector<PointIndex> corners_;
  std::vector<std::vector<PointIndex>> chains_;
  std::size_t size_ = 0;
};

// Free-function forms of the two hull primitives.
std::optional<std::size_t> LocateInsertion(const AnchoredHull& hull,
                                           std::size_t side, const Point& q,
                                           SearchStrategy strategy);
void SpliceVertex(AnchoredHull& hull, std::size_t side, std::size_t at,
                  PointIndex new_index);

// Builds the strict hull directly during the pruning scan: each point outside
// box side j is only compared against the working hull between corners j and
// j+1. Throws HullError(kEmptyInput).
HullResult BuildAtIncremental(std::span<const Point> points, BoxMode mode,
                              AtOptions opts = AtOptions::Optimised());

}  // namespace hullkit
