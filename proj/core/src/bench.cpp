#include "hullkit/bench.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <ostream>
#include <thread>

#include "hullkit/baselines.hpp"
#include "hullkit/error.hpp"
#include "hullkit/point_io.hpp"
#include "hullkit/pure_incremental.hpp"

namespace hullkit {
namespace {

constexpr std::array<Algorithm, 8> kAllAlgorithms = {
    Algorithm::kAtBasic,  Algorithm::kAtOpt,  Algorithm::kIncremental,
    Algorithm::kBucketed, Algorithm::kGraham, Algorithm::kJarvis,
    Algorithm::kQuickhull, Algorithm::kChain,
};

constexpr std::array<Algorithm, 7> kVerified = {
    Algorithm::kAtBasic,  Algorithm::kAtOpt,  Algorithm::kIncremental,
    Algorithm::kBucketed, Algorithm::kGraham, Algorithm::kJarvis,
    Algorithm::kQuickhull,
};

BenchRecord RunCell(const BenchConfig& config, Algorithm algo, std::size_t n,
                    std::size_t rep, std::size_t& failures) {
  const std::uint64_t seed = config.seed + rep;
  const PointSet points = Generate(config.dist, n, seed);

  BenchRecord rec;
  rec.algo = std::string(ToString(algo));
  rec.dist = std::string(ToString(config.dist));
  rec.n = n;
  rec.seed = seed;
  if (points.empty()) return rec;

  std::vector<double> times;
  HullResult result;
  const std::size_t runs = std::max<std::size_t>(1, config.timing_runs);
  for (std::size_t r = 0; r < runs; ++r) {
    const auto start = std::chrono::steady_clock::now();
    result = RunAlgorithm(algo, points, config.run);
    const auto stop = std::chrono::steady_clock::now();
    times.push_back(static_cast<double>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start)
            .count()));
  }

  if (UsesBox(algo)) {
    rec.mode = CornerCount(config.run.mode);
    rec.p_actual = result.stats.box_corners;
    rec.n_prime = result.stats.n_prime_seen;
  }
  rec.h = result.hull.size();
  rec.elapsed_ns = static_cast<std::uint64_t>(Median(std::move(times)));
  rec.max_temp_hull = result.stats.max_temp_hull;
  rec.orientation_calls = result.stats.orientation_calls;

  if (config.verify && result.hull != MonotoneChain(points)) ++failures;
  return rec;
}

}  // namespace

std::string_view ToString(Algorithm algo) {
  switch (algo) {
    case Algorithm::kAtBasic:
      return "at-basic";
    case Algorithm::kAtOpt:
      return "at-opt";
    case Algorithm::kIncremental:
      return "incremental";
    case Algorithm::kBucketed:
      return "bucketed";
    case Algorithm::kGraham:
      return "graham";
    case Algorithm::kJarvis:
      return "jarvis";
    case Algorithm::kQuickhull:
      return "quickhull";
    case Algorithm::kChain:
      return "chain";
  }
  return "unknown";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms) {
    if (ToString(a) == name) return a;
  }
  return std::nullopt;
}

bool UsesBox(Algorithm algo) noexcept {
  return algo == Algorithm::kAtBasic || algo == Algorithm::kAtOpt ||
         algo == Algorithm::kBucketed;
}

HullResult RunAlgorithm(Algorithm algo, std::span<const Point> points,
                        const RunOptions& opts) {
  switch (algo) {
    case Algorithm::kAtBasic:
      return BuildAtIncremental(points, opts.mode,
                                opts.at.value_or(AtOptions::Basic()));
    case Algorithm::kAtOpt:
      return BuildAtIncremental(points, opts.mode,
                                opts.at.value_or(AtOptions::Optimised()));
    case Algorithm::kIncremental:
      return BuildIncremental(points);
    case Algorithm::kBucketed:
      return BuildBucketed(points, opts.mode, opts.bucket);
    case Algorithm::kGraham:
      return GrahamScan(points);
    case Algorithm::kJarvis:
      return JarvisMarch(points);
    case Algorithm::kQuickhull:
      return Quickhull(points);
    case Algorithm::kChain:
      return MonotoneChainWithStats(points);
  }
  throw HullError(ErrorCode::kInvalidArgument, "unknown algorithm");
}

void WriteCsv(std::ostream& out, std::span<const BenchRecord> records) {
  out << kCsvHeader << '\n';
  for (const BenchRecord& r : records) {
    out << r.algo << ',' << r.mode << ',' << r.dist << ',' << r.n << ','
        << r.seed << ',' << r.n_prime << ',' << r.p_actual << ',' << r.h << ','
        << r.elapsed_ns << ',' << r.max_temp_hull << ',' << r.orientation_calls
        << '\n';
  }
}

BenchOutcome RunBench(const BenchConfig& config) {
  struct Cell {
    Algorithm algo;
    std::size_t n;
    std::size_t rep;
  };
  std::vector<Cell> cells;
  for (Algorithm algo : config.algos) {
    for (std::size_t n : config.sizes) {
      for (std::size_t rep = 0; rep < config.reps; ++rep) {
        cells.push_back({algo, n, rep});
      }
    }
  }

  BenchOutcome outcome;
  outcome.records.resize(cells.size());
  std::vector<std::size_t> failures(cells.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < cells.size(); c = next++) {
      outcome.records[c] =
          RunCell(config, cells[c].algo, cells[c].n, cells[c].rep, failures[c]);
    }
  };

  const std::size_t jobs = std::clamp<std::size_t>(config.jobs, 1, cells.size() + 1);
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  for (std::size_t f : failures) outcome.verify_failures += f;
  return outcome;
}

double Median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid),
                   values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower = *std::max_element(
      values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

PowerFit FitPowerLaw(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw HullError(ErrorCode::kInvalidArgument,
                    "FitPowerLaw: need two or more (x, y) pairs");
  }
  const auto n = static_cast<double>(xs.size());
  double sx = 0, sy = 0;
  std::vector<double> lx(xs.size()), ly(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) {
      throw HullError(ErrorCode::kInvalidArgument,
                      "FitPowerLaw: values must be positive");
    }
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
    sx += lx[i];
    sy += ly[i];
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0.0) {
    throw HullError(ErrorCode::kDegenerateFit,
                    "FitPowerLaw: all x values are equal");
  }
  PowerFit fit;
  fit.exponent = sxy / sxx;
  fit.coefficient = std::exp(my - fit.exponent * mx);
  if (syy == 0.0) {
    fit.r2 = 1.0;
  } else {
    double ss_res = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      const double r = ly[i] - (my + fit.exponent * (lx[i] - mx));
      ss_res += r * r;
    }
    fit.r2 = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  }
  return fit;
}

double PredictedOperationCount(CostModel model, double n, double p, double p0,
                               double n_prime, double h) {
  if (p <= 0.0) {
    throw HullError(ErrorCode::kInvalidArgument,
                    "PredictedOperationCount: p must be positive");
  }
  switch (model) {
    case CostModel::kEq1:
      return n * (p + p0) + n_prime * h / p + (h - p) * h / p;
    case CostModel::kEq2:
      return n * (p + p0) + n_prime * h / p + (h - p) * h / p +
             (h - p) * h / 2.0;
    case CostModel::kEq3:
      return 2.0 * n * p + p * ((n / p) * std::log2(n / p));
  }
  throw HullError(ErrorCode::kInvalidArgument, "unknown cost model");
}

std::span<const Algorithm> VerifiedAlgorithms() { return kVerified; }

VerifyReport VerifyEquivalence(Distribution dist, std::size_t n,
                               std::size_t reps, std::uint64_t seed,
                               BoxMode mode,
                               const std::optional<std::string>& dump_dir) {
  if (n == 0) {
    throw HullError(ErrorCode::kInvalidArgument, "VerifyEquivalence: n == 0");
  }
  VerifyReport report;
  RunOptions opts;
  opts.mode = mode;
  for (std::size_t rep = 0; rep < reps; ++rep) {
    const std::uint64_t s = seed + rep;
    const PointSet points = Generate(dist, n, s);
    const HullIndices expected = MonotoneChain(points);
    bool all_ok = true;
    std::string dump_base;
    for (Algorithm algo : kVerified) {
      HullIndices actual;
      try {
        actual = RunAlgorithm(algo, points, opts).hull;
      } catch (const HullError&) {
        actual.clear();
      }
      if (actual == expected) continue;
      all_ok = false;
      VerifyMismatch mismatch{std::string(ToString(algo)), s, expected, actual,
                              {}};
      if (dump_dir) {
        std::filesystem::create_directories(*dump_dir);
        const std::string base = *dump_dir + "/mismatch_" +
                                 std::string(ToString(dist)) + "_" +
                                 std::to_string(n) + "_" + std::to_string(s);
        if (dump_base.empty()) {
          dump_base = base;
          WritePointsFile(base + ".pts", points);
        }
        WriteHullFile(base + "." + mismatch.algo + ".expected.hull", expected);
        WriteHullFile(base + "." + mismatch.algo + ".actual.hull", actual);
        mismatch.dump_path = base + ".pts";
      }
      report.mismatches.push_back(std::move(mismatch));
    }
    ++report.instances;
    if (all_ok) ++report.passed;
  }
  return report;
}

}  // namespace hullkit
