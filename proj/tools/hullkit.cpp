#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hullkit/bench.hpp"
#include "hullkit/datagen.hpp"
#include "hullkit/error.hpp"
#include "hullkit/point_io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

// Thrown for bad option values that CLI11 cannot check on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

hullkit::Distribution DistOrThrow(const std::string& name) {
  auto d = hullkit::ParseDistribution(name);
  if (!d) throw UsageError("unknown distribution '" + name + "'");
  return *d;
}

hullkit::Algorithm AlgoOrThrow(const std::string& name) {
  auto a = hullkit::ParseAlgorithm(name);
  if (!a) throw UsageError("unknown algorithm '" + name + "'");
  return *a;
}

std::vector<std::string> SplitList(const std::string& list) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw UsageError("empty list '" + list + "'");
  return out;
}

std::size_t ParseSize(const std::string& s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("not a non-negative integer: '" + s + "'");
  }
  return v;
}

struct GenArgs {
  std::string dist;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int RunGen(const GenArgs& a) {
  hullkit::WritePointsFile(a.out, hullkit::Generate(DistOrThrow(a.dist), a.n, a.seed));
  return kOk;
}

struct HullArgs {
  std::string algo;
  int mode = 8;
  bool no_dichotomy = false;
  bool no_side_buffers = false;
  bool no_triangle_filter = false;
  bool no_midpoint_split = false;
  std::string in;
  std::string out;
};

int RunHull(const HullArgs& a) {
  const hullkit::Algorithm algo = AlgoOrThrow(a.algo);
  hullkit::RunOptions opts;
  opts.mode = hullkit::BoxModeFromInt(a.mode);
  if (algo == hullkit::Algorithm::kAtBasic || algo == hullkit::Algorithm::kAtOpt) {
    hullkit::AtOptions at = algo == hullkit::Algorithm::kAtOpt
                                ? hullkit::AtOptions::Optimised()
                                : hullkit::AtOptions::Basic();
    if (a.no_dichotomy) at.dichotomy = false;
    if (a.no_side_buffers) at.side_buffers = false;
    opts.at = at;
  }
  opts.bucket.triangle_filter = !a.no_triangle_filter;
  opts.bucket.midpoint_split = !a.no_midpoint_split;

  const hullkit::PointSet points = hullkit::ReadPointsFile(a.in);
  const hullkit::HullResult result = hullkit::RunAlgorithm(algo, points, opts);
  hullkit::WriteHullFile(a.out, result.hull);
  return kOk;
}

struct BenchArgs {
  std::string algos;
  std::string dist;
  std::string n_list;
  std::size_t reps = 1;
  std::uint64_t seed = 0;
  bool verify = false;
  std::string csv;
  int mode = 8;
  std::size_t jobs = 1;
  std::size_t timing_runs = 1;
};

int RunBenchCommand(const BenchArgs& a) {
  hullkit::BenchConfig config;
  for (const auto& name : SplitList(a.algos)) config.algos.push_back(AlgoOrThrow(name));
  config.dist = DistOrThrow(a.dist);
  for (const auto& n : SplitList(a.n_list)) config.sizes.push_back(ParseSize(n));
  config.reps = a.reps;
  config.seed = a.seed;
  config.verify = a.verify;
  config.run.mode = hullkit::BoxModeFromInt(a.mode);
  config.jobs = a.jobs;
  config.timing_runs = a.timing_runs;

  const hullkit::BenchOutcome outcome = hullkit::RunBench(config);
  std::ofstream out(a.csv);
  if (!out) throw hullkit::HullError(hullkit::ErrorCode::kInvalidArgument,
                                     "cannot write " + a.csv);
  hullkit::WriteCsv(out, outcome.records);
  if (outcome.verify_failures > 0) {
    std::cerr << outcome.verify_failures << " record(s) disagree with the oracle\n";
    return kVerifyFailed;
  }
  return kOk;
}

struct FitArgs {
  std::string csv;
  std::string x;
  std::string y;
  std::string algo;
};

int RunFit(const FitArgs& a) {
  std::ifstream in(a.csv);
  if (!in) throw UsageError("cannot read " + a.csv);
  std::string line;
  if (!std::getline(in, line)) throw UsageError("empty csv " + a.csv);
  const std::vector<std::string> header = SplitList(line);
  auto column = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    throw UsageError("no column '" + name + "' in " + a.csv);
  };
  const std::size_t xc = column(a.x);
  const std::size_t yc = column(a.y);
  const std::optional<std::size_t> algo_col =
      a.algo.empty() ? std::nullopt : std::optional<std::size_t>(column("algo"));

  // Repetitions share an x; fit through the median y of each group.
  std::map<double, std::vector<double>> groups;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream row(line);
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (cells.size() != header.size()) throw UsageError("ragged csv row: " + line);
    if (algo_col && cells[*algo_col] != a.algo) continue;
    try {
      groups[std::stod(cells[xc])].push_back(std::stod(cells[yc]));
    } catch (const std::logic_error&) {
      throw UsageError("non-numeric value in row: " + line);
    }
  }
  std::vector<double> xs, ys;
  for (auto& [x, values] : groups) {
    xs.push_back(x);
    ys.push_back(hullkit::Median(std::move(values)));
  }
  const hullkit::PowerFit fit = hullkit::FitPowerLaw(xs, ys);
  std::cout << "exponent " << fit.exponent << "\ncoefficient " << fit.coefficient
            << "\nr2 " << fit.r2 << "\npoints " << xs.size() << '\n';
  return kOk;
}

struct VerifyArgs {
  std::string dist;
  std::size_t n = 1;
  std::size_t reps = 1;
  std::uint64_t seed = 0;
  int mode = 8;
  std::string dump_dir;
};

int RunVerify(const VerifyArgs& a) {
  std::optional<std::string> dump;
  if (!a.dump_dir.empty()) dump = a.dump_dir;
  const hullkit::VerifyReport report =
      hullkit::VerifyEquivalence(DistOrThrow(a.dist), a.n, a.reps, a.seed,
                                 hullkit::BoxModeFromInt(a.mode), dump);
  std::cout << report.passed << "/" << report.instances << " instances pass\n";
  for (const auto& m : report.mismatches) {
    std::cout << "mismatch " << m.algo << " seed " << m.seed;
    if (!m.dump_path.empty()) std::cout << " -> " << m.dump_path;
    std::cout << '\n';
  }
  return report.ok() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hullkit: 2-D convex hulls with octagon pruning"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a synthetic point file");
  gen_cmd->add_option("--dist", gen.dist, "square|disk|gauss|circle|collinear")->required();
  gen_cmd->add_option("--n", gen.n, "Number of points")->required();
  gen_cmd->add_option("--seed", gen.seed, "Generator seed")->required();
  gen_cmd->add_option("--out", gen.out, "Output point file")->required();

  HullArgs hull;
  auto* hull_cmd = app.add_subcommand("hull", "Compute the hull of a point file");
  hull_cmd->add_option("--algo", hull.algo, "Builder name")->required();
  hull_cmd->add_option("--mode", hull.mode, "Box corners")
      ->check(CLI::IsMember({4, 6, 8}));
  hull_cmd->add_flag("--no-dichotomy", hull.no_dichotomy);
  hull_cmd->add_flag("--no-side-buffers", hull.no_side_buffers);
  hull_cmd->add_flag("--no-triangle-filter", hull.no_triangle_filter);
  hull_cmd->add_flag("--no-midpoint-split", hull.no_midpoint_split);
  hull_cmd->add_option("--in", hull.in, "Input point file")->required();
  hull_cmd->add_option("--out", hull.out, "Output hull file")->required();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time builders and write CSV");
  bench_cmd->add_option("--algos", bench.algos, "Comma-separated builders")->required();
  bench_cmd->add_option("--dist", bench.dist, "Distribution")->required();
  bench_cmd->add_option("--n-list", bench.n_list, "Comma-separated sizes")->required();
  bench_cmd->add_option("--reps", bench.reps, "Seeds per size")->required();
  bench_cmd->add_option("--seed", bench.seed, "First seed")->required();
  bench_cmd->add_flag("--verify", bench.verify, "Compare each hull with the oracle");
  bench_cmd->add_option("--csv", bench.csv, "Output CSV")->required();
  bench_cmd->add_option("--mode", bench.mode, "Box corners")->check(CLI::IsMember({4, 6, 8}));
  bench_cmd->add_option("--jobs", bench.jobs, "Worker threads")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--timing-runs", bench.timing_runs, "Runs per record (median)")
      ->check(CLI::PositiveNumber);

  FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fit", "Power-law fit of two CSV columns");
  fit_cmd->add_option("--csv", fit.csv, "Bench CSV")->required();
  fit_cmd->add_option("--x", fit.x, "x column")->required();
  fit_cmd->add_option("--y", fit.y, "y column")->required();
  fit_cmd->add_option("--algo", fit.algo, "Only rows of this builder");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check every builder against the oracle");
  verify_cmd->add_option("--dist", verify.dist, "Distribution")->required();
  verify_cmd->add_option("--n", verify.n, "Points per instance")
      ->required()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--reps", verify.reps, "Instances")->required();
  verify_cmd->add_option("--seed", verify.seed, "First seed")->required();
  verify_cmd->add_option("--mode", verify.mode, "Box corners")->check(CLI::IsMember({4, 6, 8}));
  verify_cmd->add_option("--dump-dir", verify.dump_dir, "Write mismatching instances here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen_cmd) return RunGen(gen);
    if (*hull_cmd) return RunHull(hull);
    if (*bench_cmd) return RunBenchCommand(bench);
    if (*fit_cmd) return RunFit(fit);
    if (*verify_cmd) return RunVerify(verify);
  } catch (const UsageError& e) {
    std::cerr << "hullkit: " << e.what() << '\n';
    return kUsage;
  } catch (const hullkit::HullError& e) {
    std::cerr << "hullkit: " << hullkit::ToString(e.code()) << ": " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
