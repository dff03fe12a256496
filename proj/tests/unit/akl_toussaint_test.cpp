#include "hullkit/akl_toussaint.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "brute_hull.hpp"
#include "fuzz.hpp"
#include "hullkit/baselines.hpp"
#include "hullkit/datagen.hpp"
#include "hullkit/error.hpp"

namespace hullkit {
namespace {

using ::testing::ElementsAre;

const PointSet kS5 = {{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 2}};

TEST(FindExtremesTest, QuadOnS5CollapsesToTriangle) {
  const BoxSpec box = FindExtremes(kS5, BoxMode::kQuad);
  EXPECT_EQ(box.corners, (std::vector<PointIndex>{0, 1, 2}));
  EXPECT_EQ(box.p(), 3u);
}

TEST(FindExtremesTest, OctOnS5RecoversSquare) {
  const BoxSpec box = FindExtremes(kS5, BoxMode::kOct);
  EXPECT_EQ(box.corners, (std::vector<PointIndex>{0, 1, 2, 3}));
}

TEST(FindExtremesTest, SinglePoint) {
  const BoxSpec box = FindExtremes(PointSet{{5, 5}}, BoxMode::kOct);
  EXPECT_EQ(box.corners, (std::vector<PointIndex>{0}));
}

TEST(FindExtremesTest, IdenticalPointsPickLowestIndex) {
  const BoxSpec box = FindExtremes(PointSet{{1, 1}, {1, 1}, {1, 1}}, BoxMode::kHex);
  EXPECT_EQ(box.corners, (std::vector<PointIndex>{0}));
}

TEST(FindExtremesTest, EmptyThrows) {
  try {
    FindExtremes(PointSet{}, BoxMode::kOct);
    FAIL();
  } catch (const HullError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyInput);
  }
}

TEST(FindExtremesTest, CollinearInputGivesTwoCorners) {
  const PointSet line = {{0.5, 0.5}, {0, 0}, {1, 1}, {0.25, 0.25}};
  const BoxSpec box = FindExtremes(line, BoxMode::kOct);
  ASSERT_EQ(box.p(), 2u);
  std::vector<PointIndex> sorted = box.corners;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<PointIndex>{1, 2}));
}

TEST(FindExtremesTest, TieInsideExtremeEdgeIsNotACorner) {
  // Index 0 sits in the middle of the bottom edge; it must not be chosen.
  const PointSet pts = {{2, 0}, {0, 0}, {4, 0}, {2, 3}};
  for (BoxMode mode : {BoxMode::kQuad, BoxMode::kHex, BoxMode::kOct}) {
    const BoxSpec box = FindExtremes(pts, mode);
    EXPECT_EQ(std::count(box.corners.begin(), box.corners.end(), 0u), 0)
        << CornerCount(mode);
  }
}

TEST(BoxModeTest, FromInt) {
  EXPECT_EQ(BoxModeFromInt(6), BoxMode::kHex);
  EXPECT_THROW(BoxModeFromInt(5), HullError);
}

TEST(FilterInteriorTest, QuadOnS5KeepsTopLeftCorner) {
  const BoxSpec box = FindExtremes(kS5, BoxMode::kQuad);
  const FilterResult r = FilterInterior(kS5, box);
  EXPECT_THAT(r.kept, ElementsAre(KeptPoint{3, 2}));
  EXPECT_EQ(r.n_prime(), 1u);
}

TEST(FilterInteriorTest, OctOnS5KeepsNothing) {
  const BoxSpec box = FindExtremes(kS5, BoxMode::kOct);
  EXPECT_EQ(FilterInterior(kS5, box).n_prime(), 0u);
}

TEST(FilterInteriorTest, CollinearKeepsNothing) {
  const PointSet pts = Generate(Distribution::kCollinear, 50, 3);
  const BoxSpec box = FindExtremes(pts, BoxMode::kOct);
  EXPECT_EQ(FilterInterior(pts, box).n_prime(), 0u);
}

TEST(FilterInteriorTest, MillionSquarePointsOctagonNearTwoRootN) {
  const PointSet pts = Generate(Distribution::kSquare, 1'000'000, 11);
  const auto n_prime = FilterInterior(pts, FindExtremes(pts, BoxMode::kOct)).n_prime();
  EXPECT_GE(n_prime, 1000u);
  EXPECT_LE(n_prime, 4000u);
}

// Direct count: argmin/argmax of the eight objectives (first index on ties,
// which random doubles never produce), then points strictly right of an edge.
TEST(FilterInteriorTest, SquareCountsMatchDirectOctagon) {
  for (std::size_t n : {1000u, 100000u}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const PointSet pts = Generate(Distribution::kSquare, n, seed);
      const auto key = [](const Point& p, int d) {
        switch (d) {
          case 0: return -p.y;
          case 1: return p.x - p.y;
          case 2: return p.x;
          case 3: return p.x + p.y;
          case 4: return p.y;
          case 5: return p.y - p.x;
          case 6: return -p.x;
          default: return -p.x - p.y;
        }
      };
      std::vector<Point> corners;
      for (int d = 0; d < 8; ++d) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < n; ++i) {
          if (key(pts[i], d) > key(pts[best], d)) best = i;
        }
        corners.push_back(pts[best]);
      }
      std::size_t outside = 0;
      for (const Point& q : pts) {
        bool right = false;
        for (std::size_t j = 0; j < 8 && !right; ++j) {
          const Point& a = corners[j];
          const Point& b = corners[(j + 1) % 8];
          right = (b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x) < 0;
        }
        outside += right ? 1 : 0;
      }
      EXPECT_EQ(FilterInterior(pts, FindExtremes(pts, BoxMode::kOct)).n_prime(), outside)
          << "n=" << n << " seed=" << seed;
    }
  }
}

// Soundness and completeness against independent hulls on fuzzed sets.
TEST(AklToussaintProperty, SoundAndComplete) {
  for (std::size_t k = 0; k < 300; ++k) {
    const auto c = testing::MakeFuzzCase(k, k < 150 ? 40 : 1000);
    const auto oracle = k < 150 ? testing::BruteForceHull(c.points)
                                : MonotoneChain(c.points);
    for (BoxMode mode : {BoxMode::kQuad, BoxMode::kHex, BoxMode::kOct}) {
      const BoxSpec box = FindExtremes(c.points, mode);
      ASSERT_GE(box.p(), 1u);
      ASSERT_LE(box.p(), static_cast<std::size_t>(CornerCount(mode)));
      for (PointIndex corner : box.corners) {
        EXPECT_NE(std::find(oracle.begin(), oracle.end(), corner), oracle.end())
            << c.label << " corner " << corner << " is not a hull vertex";
      }
      const FilterResult r = FilterInterior(c.points, box);
      std::vector<bool> kept(c.points.size(), false);
      for (const KeptPoint& kp : r.kept) {
        ASSERT_LT(kp.side, box.p());
        kept[kp.index] = true;
      }
      // Every hull vertex is either a corner or kept.
      for (PointIndex v : oracle) {
        const bool corner =
            std::find(box.corners.begin(), box.corners.end(), v) != box.corners.end();
        EXPECT_TRUE(corner || kept[v]) << c.label << " lost vertex " << v;
      }
      // Completeness: hull(kept + corners) == hull(all).
      PointSet reduced;
      std::vector<PointIndex> origin;
      for (PointIndex c_i : box.corners) {
        reduced.push_back(c.points[c_i]);
        origin.push_back(c_i);
      }
      for (const KeptPoint& kp : r.kept) {
        reduced.push_back(c.points[kp.index]);
        origin.push_back(kp.index);
      }
      HullIndices mapped;
      for (PointIndex i : MonotoneChain(reduced)) mapped.push_back(origin[i]);
      EXPECT_EQ(Canonicalize(c.points, mapped), oracle) << c.label;
    }
  }
}

TEST(AklToussaintProperty, QuadCornersAreOctCornersBeforeCollapse) {
  // Quad objectives are a subset of the Oct objectives with identical tie
  // rules; on general-position data no collapse happens, so the index sets
  // nest.
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const PointSet pts = Generate(Distribution::kSquare, 200, seed);
    const auto quad = FindExtremes(pts, BoxMode::kQuad).corners;
    const auto oct = FindExtremes(pts, BoxMode::kOct).corners;
    for (PointIndex q : quad) {
      EXPECT_NE(std::find(oct.begin(), oct.end(), q), oct.end()) << seed;
    }
  }
}

}  // namespace
}  // namespace hullkit
