#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "hullkit/geometry.hpp"
#include "hullkit/hull.hpp"

namespace hullkit {

// Point files: UTF-8 text, one "x y" pair per line, blank lines and lines
// starting with '#' ignored. Throws HullError(kParse) on malformed or
// non-finite coordinates.
PointSet ReadPoints(std::istream& in);
PointSet ReadPointsFile(const std::string& path);

// Coordinates are written in shortest round-trip form, so a written set reads
// back bit-for-bit.
void WritePoints(std::ostream& out, std::span<const Point> points);
void WritePointsFile(const std::string& path, std::span<const Point> points);

// Hull files: one 0-based index per line.
void WriteHull(std::ostream& out, std::span<const PointIndex> hull);
void WriteHullFile(const std::string& path, std::span<const PointIndex> hull);
HullIndices ReadHull(std::istream& in);

}  // namespace hullkit
