#include "hullkit/geometry.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "hullkit/datagen.hpp"
#include "hullkit/error.hpp"

namespace hullkit {
namespace {

TEST(OrientTest, BasicTurns) {
  EXPECT_EQ(Orient({0, 0}, {1, 0}, {0, 1}), Orientation::kLeft);
  EXPECT_EQ(Orient({0, 0}, {1, 0}, {2, 0}), Orientation::kCollinear);
  EXPECT_EQ(Orient({0, 0}, {0, 1}, {1, 1}), Orientation::kRight);
}

TEST(CrossTest, SignedMagnitude) {
  EXPECT_EQ(Cross({0, 0}, {2, 0}, {1, 3}), 6.0);
  EXPECT_EQ(Cross({0, 0}, {2, 0}, {1, 0}), 0.0);
  EXPECT_EQ(Cross({0, 0}, {0, 2}, {1, 0}), -2.0);
}

TEST(CountingOrientTest, CountsCalls) {
  CountingOrient orient;
  orient({0, 0}, {1, 0}, {0, 1});
  orient({0, 0}, {1, 0}, {0, 1});
  EXPECT_EQ(orient.calls(), 2u);
}

const std::vector<Point> kSquare = {{0, 0}, {4, 0}, {4, 4}, {0, 4}};

TEST(PointVsChainTest, CenterIsInside) {
  EXPECT_TRUE(PointVsChain({2, 2}, kSquare, 0, 3, true).inside());
}

TEST(PointVsChainTest, OutsideReportsFirstRightSide) {
  const auto r = PointVsChain({5, 2}, kSquare, 0, 3, true);
  ASSERT_FALSE(r.inside());
  EXPECT_EQ(*r.outside_side, 1u);
}

TEST(PointVsChainTest, BoundaryIsInside) {
  EXPECT_TRUE(PointVsChain({4, 2}, kSquare, 0, 3, true).inside());
}

TEST(PointVsChainTest, ClosingSegmentOnlyWhenClosed) {
  // (-1, 2) is right of the closing segment (0,4) -> (0,0) only.
  EXPECT_TRUE(PointVsChain({-1, 2}, kSquare, 0, 3, false).inside());
  const auto r = PointVsChain({-1, 2}, kSquare, 0, 3, true);
  ASSERT_FALSE(r.inside());
  EXPECT_EQ(*r.outside_side, 3u);
}

TEST(PointVsChainTest, EmptyRangeThrows) {
  try {
    PointVsChain({1, 1}, kSquare, 2, 2, true);
    FAIL() << "expected EmptyChain";
  } catch (const HullError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyChain);
  }
  EXPECT_THROW(PointVsChain({1, 1}, kSquare, 3, 1, false), HullError);
}

TEST(RequireFiniteTest, RejectsNanAndInf) {
  std::vector<Point> ok = {{0, 0}, {1, 2}};
  EXPECT_NO_THROW(RequireFinite(ok));
  std::vector<Point> bad = {{0, 0}, {1.0 / 0.0, 2}};
  EXPECT_THROW(RequireFinite(bad), HullError);
}

// Property: sign antisymmetry and integer translation invariance on small
// integer coordinates, where double arithmetic is exact.
TEST(OrientProperty, AntisymmetryAndTranslation) {
  SplitMix64 rng(42);
  auto coord = [&] { return static_cast<double>(rng.Next() % 41) - 20.0; };
  for (int iter = 0; iter < 5000; ++iter) {
    const Point a{coord(), coord()}, b{coord(), coord()}, c{coord(), coord()};
    const Orientation abc = Orient(a, b, c);
    const Orientation acb = Orient(a, c, b);
    if (abc == Orientation::kCollinear) {
      EXPECT_EQ(acb, Orientation::kCollinear);
    } else {
      EXPECT_NE(abc, acb);
      EXPECT_NE(acb, Orientation::kCollinear);
    }
    const double dx = coord(), dy = coord();
    EXPECT_EQ(abc, Orient({a.x + dx, a.y + dy}, {b.x + dx, b.y + dy},
                          {c.x + dx, c.y + dy}));
  }
}

// Property: chain vertices are inside; an Outside(j) verdict means a strict
// right turn against segment j.
TEST(PointVsChainProperty, VerticesInsideAndOutsideIsRight) {
  const std::vector<Point> hexagon = {{2, 0}, {4, 1}, {4, 3},
                                      {2, 4}, {0, 3}, {0, 1}};
  for (const Point& v : hexagon) {
    EXPECT_TRUE(PointVsChain(v, hexagon, 0, 5, true).inside());
  }
  SplitMix64 rng(7);
  for (int iter = 0; iter < 2000; ++iter) {
    const Point q{static_cast<double>(rng.Next() % 13) - 4.0,
                  static_cast<double>(rng.Next() % 13) - 4.0};
    const auto r = PointVsChain(q, hexagon, 0, 5, true);
    if (!r.inside()) {
      const std::size_t j = *r.outside_side;
      EXPECT_EQ(Orient(hexagon[j], hexagon[(j + 1) % 6], q), Orientation::kRight);
    }
  }
}

}  // namespace
}  // namespace hullkit
