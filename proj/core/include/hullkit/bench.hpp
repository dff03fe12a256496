#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hullkit/akl_toussaint.hpp"
#include "hullkit/at_incremental.hpp"
#include "hullkit/bucketed.hpp"
#include "hullkit/datagen.hpp"
#include "hullkit/hull.hpp"

namespace hullkit {

enum class Algorithm {
  kAtBasic,
  kAtOpt,
  kIncremental,
  kBucketed,
  kGraham,
  kJarvis,
  kQuickhull,
  kChain,
};

// CLI names: at-basic, at-opt, incremental, bucketed, graham, jarvis,
// quickhull, chain.
std::string_view ToString(Algorithm algo);
std::optional<Algorithm> ParseAlgorithm(std::string_view name);

// Option overrides for a single run. at-opt starts from AtOptions::Optimised,
// at-basic from AtOptions::Basic; bucketed uses `bucket`.
struct RunOptions {
  BoxMode mode = BoxMode::kOct;
  std::optional<AtOptions> at;
  BucketOptions bucket;
};

HullResult RunAlgorithm(Algorithm algo, std::span<const Point> points,
                        const RunOptions& opts = {});

// Algorithms that build their own pruning box report mode and p.
bool UsesBox(Algorithm algo) noexcept;

struct BenchRecord {
  std::string algo;
  int mode = 0;
  std::string dist;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t n_prime = 0;
  std::uint64_t p_actual = 0;
  std::uint64_t h = 0;
  std::uint64_t elapsed_ns = 0;
  std::uint64_t max_temp_hull = 0;
  std::uint64_t orientation_calls = 0;
};

inline constexpr std::string_view kCsvHeader =
    "algo,mode,dist,n,seed,n_prime,p_actual,h,elapsed_ns,max_temp_hull,"
    "orientation_calls";

void WriteCsv(std::ostream& out, std::span<const BenchRecord> records);

struct BenchConfig {
  std::vector<Algorithm> algos;
  Distribution dist = Distribution::kSquare;
  std::vector<std::size_t> sizes;
  std::size_t reps = 1;
  std::uint64_t seed = 0;
  RunOptions run;
  bool verify = false;
  // Runs per record; elapsed_ns is their median.
  std::size_t timing_runs = 1;
  std::size_t jobs = 1;
};

struct BenchOutcome {
  std::vector<BenchRecord> records;  // config order: algo, n, rep
  std::size_t verify_failures = 0;
};

// Cell (algo, n, rep) uses seed `config.seed + rep`. Records come back in
// config order whatever `jobs` is.
BenchOutcome RunBench(const BenchConfig& config);

struct PowerFit {
  double exponent = 0.0;
  double coefficient = 0.0;
  double r2 = 0.0;
};

// Least squares on (ln x, ln y). Throws HullError(kInvalidArgument) for
// mismatched or short input or non-positive values, and
// HullError(kDegenerateFit) when every x is equal.
PowerFit FitPowerLaw(std::span<const double> xs, std::span<const double> ys);

enum class CostModel { kEq1, kEq2, kEq3 };

// Eq1: N (p + p0) + N' h/p + (h - p) h/p
// Eq2: Eq1 + (h - p) h/2
// Eq3: 2 N p + p (N/p) log2(N/p)
// Throws HullError(kInvalidArgument) when p == 0.
double PredictedOperationCount(CostModel model, double n, double p, double p0,
                               double n_prime, double h);

struct VerifyMismatch {
  std::string algo;
  std::uint64_t seed = 0;
  HullIndices expected;
  HullIndices actual;
  std::string dump_path;  // point file written for the instance, if any
};

struct VerifyReport {
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::vector<VerifyMismatch> mismatches;

  bool ok() const noexcept { return mismatches.empty(); }
};

// Every builder except the oracle itself, with its default options.
std::span<const Algorithm> VerifiedAlgorithms();

// Runs each verified algorithm on `reps` instances (seeds seed..seed+reps-1)
// and compares canonical cycles with the monotone chain. When `dump_dir` is
// set, mismatching instances are written there as point files.
VerifyReport VerifyEquivalence(Distribution dist, std::size_t n,
                               std::size_t reps, std::uint64_t seed,
                               BoxMode mode = BoxMode::kOct,
                               const std::optional<std::string>& dump_dir = {});

double Median(std::vector<double> values);

}  // namespace hullkit
