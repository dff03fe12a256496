#include "hullkit/point_io.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "hullkit/datagen.hpp"
#include "hullkit/error.hpp"

namespace hullkit {
namespace {

TEST(ReadPointsTest, CommentsBlanksAndNotation) {
  std::istringstream in("# header\n1 2\n\n  -3.5 4e-2\n# trailing\n1E3 0\n");
  const PointSet pts = ReadPoints(in);
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_EQ(pts[1], (Point{-3.5, 0.04}));
  EXPECT_EQ(pts[2], (Point{1000, 0}));
}

TEST(ReadPointsTest, RejectsMalformed) {
  for (const char* bad : {"1\n", "1 2 3\n", "a b\n", "1 nan\n", "1 inf\n", "1,2\n"}) {
    std::istringstream in(bad);
    try {
      ReadPoints(in);
      FAIL() << bad;
    } catch (const HullError& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << bad;
    }
  }
}

TEST(WritePointsTest, RoundTripsBitForBit) {
  const PointSet pts = Generate(Distribution::kGaussDisk, 2000, 4);
  std::stringstream buf;
  WritePoints(buf, pts);
  EXPECT_EQ(ReadPoints(buf), pts);
}

TEST(HullFileTest, OneIndexPerLine) {
  std::stringstream buf;
  WriteHull(buf, HullIndices{0, 5, 2});
  EXPECT_EQ(buf.str(), "0\n5\n2\n");
  EXPECT_EQ(ReadHull(buf), (HullIndices{0, 5, 2}));
}

}  // namespace
}  // namespace hullkit
