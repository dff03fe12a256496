#include "hullkit/pure_incremental.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "fuzz.hpp"
#include "hullkit/baselines.hpp"
#include "hullkit/datagen.hpp"
#include "hullkit/error.hpp"

namespace hullkit {
namespace {

TEST(SeedTriangleTest, FirstThreePoints) {
  const PointSet pts = {{0, 0}, {1, 0}, {1, 1}, {0.5, 0.5}};
  const auto seed = SeedTriangleFor(pts);
  ASSERT_TRUE(std::holds_alternative<SeedTriangle>(seed));
  EXPECT_EQ(std::get<SeedTriangle>(seed).vertices, (std::array<PointIndex, 3>{0, 1, 2}));
}

TEST(SeedTriangleTest, SkipsAlignedPoint) {
  const PointSet pts = {{0, 0}, {1, 0}, {2, 0}, {2, 1}};
  const auto seed = SeedTriangleFor(pts);
  ASSERT_TRUE(std::holds_alternative<SeedTriangle>(seed));
  const auto& tri = std::get<SeedTriangle>(seed);
  EXPECT_EQ(tri.vertices, (std::array<PointIndex, 3>{0, 1, 3}));
  EXPECT_EQ(tri.resume, 2u);
}

TEST(SeedTriangleTest, OrientsCounterClockwise) {
  const PointSet pts = {{0, 0}, {0, 1}, {1, 1}};
  const auto& tri = std::get<SeedTriangle>(SeedTriangleFor(pts));
  EXPECT_EQ(tri.vertices, (std::array<PointIndex, 3>{0, 2, 1}));
}

TEST(SeedTriangleTest, AllCollinearReportsEndpoints) {
  const auto seed = SeedTriangleFor(PointSet{{0, 0}, {1, 1}, {2, 2}});
  ASSERT_TRUE(std::holds_alternative<AllCollinear>(seed));
  EXPECT_EQ(std::get<AllCollinear>(seed).first, 0u);
  EXPECT_EQ(std::get<AllCollinear>(seed).last, 2u);
}

TEST(SeedTriangleTest, EmptyThrows) {
  EXPECT_THROW(SeedTriangleFor(PointSet{}), HullError);
}

TEST(BuildIncrementalTest, S5) {
  const PointSet s5 = {{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 2}};
  const auto r = BuildIncremental(s5);
  EXPECT_EQ(r.hull, (HullIndices{0, 1, 2, 3}));
}

TEST(BuildIncrementalTest, SkippedAlignedPointIsStillProcessed) {
  const PointSet pts = {{0, 0}, {1, 0}, {2, 0}, {2, 1}};
  EXPECT_EQ(BuildIncremental(pts).hull, (HullIndices{0, 2, 3}));
}

TEST(BuildIncrementalTest, SortedParabolaNeverOvershoots) {
  PointSet pts;
  for (int i = -20; i <= 20; ++i) pts.push_back({double(i), double(i * i)});
  const auto r = BuildIncremental(pts);
  EXPECT_EQ(r.hull.size(), pts.size());
  EXPECT_EQ(r.stats.max_temp_hull, r.hull.size());
}

TEST(BuildIncrementalTest, Degenerate) {
  EXPECT_EQ(BuildIncremental(PointSet{{1, 2}}).hull, (HullIndices{0}));
  EXPECT_EQ(BuildIncremental(PointSet{{1, 2}, {1, 2}}).hull, (HullIndices{0}));
  EXPECT_EQ(BuildIncremental(PointSet{{2, 2}, {0, 0}, {1, 1}}).hull, (HullIndices{1, 0}));
}

TEST(BuildIncrementalTest, TempHullExcessOnUniformSquareIsSmall) {
  const PointSet pts = Generate(Distribution::kSquare, 10000, 2024);
  const auto r = BuildIncremental(pts);
  EXPECT_EQ(r.hull, MonotoneChain(pts));
  const auto excess = r.stats.max_temp_hull - r.hull.size();
  RecordProperty("max_temp_hull_excess", static_cast<int>(excess));
  EXPECT_GE(r.stats.max_temp_hull, r.hull.size());
}

TEST(PureIncrementalProperty, MatchesOracleAndIsPermutationInvariant) {
  for (std::size_t k = 0; k < 600; ++k) {
    const auto c = testing::MakeFuzzCase(k, 600);
    const auto oracle = MonotoneChain(c.points);
    const auto r = BuildIncremental(c.points);
    ASSERT_EQ(r.hull, oracle) << c.label;
    EXPECT_GE(r.stats.max_temp_hull, r.hull.size());

    // Reversed order: same hull geometry. With duplicates the representative
    // index may change, so compare coordinates.
    std::vector<PointIndex> perm(c.points.size());
    std::iota(perm.rbegin(), perm.rend(), PointIndex{0});
    SplitMix64 rng(k);
    for (std::size_t i = perm.size(); i > 1; --i) {
      std::swap(perm[i - 1], perm[rng.Next() % i]);
    }
    PointSet shuffled;
    for (PointIndex i : perm) shuffled.push_back(c.points[i]);
    const auto rs = BuildIncremental(shuffled);
    ASSERT_EQ(rs.hull.size(), r.hull.size()) << c.label;
    for (std::size_t i = 0; i < rs.hull.size(); ++i) {
      EXPECT_EQ(shuffled[rs.hull[i]], c.points[r.hull[i]]) << c.label;
    }
  }
}

}  // namespace
}  // namespace hullkit
