#include "hullkit/point_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "hullkit/error.hpp"

namespace hullkit {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void ParseFailure(std::size_t line, std::string_view text) {
  throw HullError(ErrorCode::kParse, "line " + std::to_string(line) +
                                         ": cannot parse point '" +
                                         std::string(text) + "'");
}

double ParseCoordinate(std::string_view token, std::size_t line,
                       std::string_view text) {
  double value = 0.0;
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    ParseFailure(line, text);
  }
  return value;
}

void AppendShortest(std::string& out, double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, ptr);
}

std::ofstream OpenForWrite(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw HullError(ErrorCode::kInvalidArgument, "cannot open " + path);
  }
  return out;
}

}  // namespace

PointSet ReadPoints(std::istream& in) {
  PointSet points;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view text = Trim(raw);
    if (text.empty() || text.front() == '#') continue;
    const auto space = text.find_first_of(" \t");
    if (space == std::string_view::npos) ParseFailure(line, text);
    const std::string_view xs = text.substr(0, space);
    const std::string_view ys = Trim(text.substr(space));
    if (ys.find_first_of(" \t") != std::string_view::npos) {
      ParseFailure(line, text);
    }
    points.push_back(
        {ParseCoordinate(xs, line, text), ParseCoordinate(ys, line, text)});
  }
  return points;
}

PointSet ReadPointsFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw HullError(ErrorCode::kInvalidArgument, "cannot open " + path);
  return ReadPoints(in);
}

void WritePoints(std::ostream& out, std::span<const Point> points) {
  std::string buffer;
  for (const Point& p : points) {
    buffer.clear();
    AppendShortest(buffer, p.x);
    buffer.push_back(' ');
    AppendShortest(buffer, p.y);
    buffer.push_back('\n');
    out << buffer;
  }
}

void WritePointsFile(const std::string& path, std::span<const Point> points) {
  auto out = OpenForWrite(path);
  WritePoints(out, points);
}

void WriteHull(std::ostream& out, std::span<const PointIndex> hull) {
  for (PointIndex i : hull) out << i << '\n';
}

void WriteHullFile(const std::string& path, std::span<const PointIndex> hull) {
  auto out = OpenForWrite(path);
  WriteHull(out, hull);
}

HullIndices ReadHull(std::istream& in) {
  HullIndices hull;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view text = Trim(raw);
    if (text.empty() || text.front() == '#') continue;
    PointIndex value = 0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
      throw HullError(ErrorCode::kParse,
                      "line " + std::to_string(line) + ": bad index");
    }
    hull.push_back(value);
  }
  return hull;
}

}  // namespace hullkit
