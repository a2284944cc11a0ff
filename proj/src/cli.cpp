#include "critradius/cli.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "critradius/asymptotics.h"
#include "critradius/errors.h"
#include "critradius/format.h"
#include "critradius/montecarlo.h"
#include "critradius/region_io.h"
#include "critradius/rgg.h"
#include "critradius/sampling.h"

namespace critradius {

namespace {

using nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 20240517;

/// A usage problem attributable to one flag; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("RGG_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  const std::string_view text(env);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("RGG_SEED: not an unsigned 64-bit integer: '" + std::string(text) + "'");
  }
  return value;
}

/// A region flag names a file, or a built-in region when no such file exists.
ConvexRegion resolve_region(const std::string& spec, double rect_width) {
  if (!std::filesystem::exists(spec)) {
    const auto names = named_region_names();
    if (std::find(names.begin(), names.end(), spec) != names.end()) {
      return named_region(spec, rect_width);
    }
  }
  return load_region_file(spec);
}

std::vector<double> parse_list(const std::string& text, const char* flag) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    double v = 0.0;
    if (!parse_double(item, v) || !std::isfinite(v)) {
      throw UsageError(std::string(flag) + ": cannot parse '" + item + "' as a number");
    }
    values.push_back(v);
  }
  if (values.empty()) throw UsageError(std::string(flag) + ": empty list");
  return values;
}

void require_unit_area(const ConvexRegion& region, const char* flag) {
  if (std::abs(region.area() - 1.0) > 1e-9) {
    throw UsageError(std::string(flag) + ": region '" + region.id() + "' has area " +
                     format_g17(region.area()) + "; set \"normalize\": true");
  }
}

std::vector<Point> read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open points file '" + path + "'");
  char first = '\0';
  in >> std::ws;
  first = static_cast<char>(in.peek());
  if (first == '[') return read_points_json(in);
  return read_points_csv(in);
}

struct PredictArgs {
  double n = 0.0;
  int k = 0;
  double c = 0.0;
  std::optional<double> perimeter;
  std::string region;
};

void cmd_predict(const PredictArgs& a, std::ostream& out) {
  double perimeter = 0.0;
  if (!a.region.empty()) {
    const ConvexRegion region = resolve_region(a.region, 0.5);
    require_unit_area(region, "--region");
    perimeter = region.perimeter();
  } else if (a.perimeter) {
    perimeter = *a.perimeter;
  } else if (a.k >= 1) {
    throw UsageError("--perimeter: required for k >= 1 (or pass --region)");
  }

  ordered_json doc;
  try {
    doc["r_n"] = predicted_radius({a.n, a.k, a.c, perimeter});
    if (a.k >= 1) doc["xi"] = xi(a.k, perimeter, a.c);
  } catch (const DomainError& e) {
    const std::string what = e.what();
    const char* flag = what.find("perimeter") != std::string::npos ? "--perimeter" : "--n";
    throw UsageError(std::string(flag) + ": " + what);
  }
  doc["limit_probability"] = limit_probability(a.c);
  out << doc.dump(2) << '\n';
}

struct IntegralArgs {
  std::string region;
  double n = 0.0;
  int k = 1;
  double c = 0.0;
  std::optional<double> r;
  std::string cells;
  double band_width = 2.0;
  unsigned threads = 0;
};

void cmd_integral(const IntegralArgs& a, std::ostream& out) {
  const ConvexRegion region = resolve_region(a.region, 0.5);
  QuadratureSpec quad;
  quad.band_width = a.band_width;
  quad.threads = a.threads;
  if (!a.cells.empty()) {
    const std::vector<double> cells = parse_list(a.cells, "--cells");
    if (cells.size() != 2) throw UsageError("--cells: expected two values a,b");
    quad.interior_cell = cells[0];
    quad.band_cell = cells[1];
  }

  double r = 0.0;
  if (a.r) {
    r = *a.r;
  } else {
    require_unit_area(region, "--region");
    r = predicted_radius({a.n, a.k, a.c, region.perimeter()});
  }
  const IntegralBreakdown result = integral_lhs(region, a.n, r, a.k, quad);

  ordered_json doc;
  doc["region_id"] = region.id();
  doc["n"] = a.n;
  doc["k"] = a.k;
  doc["c"] = a.c;
  doc["r"] = r;
  doc["cells"] = {{"interior_cell", quad.interior_cell},
                  {"band_cell", quad.band_cell},
                  {"band_width", quad.band_width}};
  doc["total"] = result.total;
  doc["interior"] = result.interior;
  doc["boundary_band"] = result.boundary_band;
  ordered_json targets;
  targets["exp_neg_c"] = std::exp(-a.c);
  if (a.k >= 1) {
    targets["exp_neg_xi"] = std::exp(-xi(a.k, region.perimeter(), a.c));
    targets["boundary"] = boundary_band_target(a.k, region.perimeter(), a.c);
  }
  doc["targets"] = targets;
  out << doc.dump(2) << '\n';
}

struct SimulateArgs {
  std::string region = "unit-square";
  std::size_t n = 2000;
  int k = 0;
  std::string c_grid = "-1,0,1,2";
  std::size_t reps = 1000;
  std::optional<std::uint64_t> seed;
  std::string process = "uniform";
  std::string out = "results.csv";
  std::string trials_out;
  unsigned threads = 0;
};

void write_file_or_stdout(const std::string& path, std::ostream& out,
                          const std::function<void(std::ostream&)>& write) {
  if (path == "-") {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot write '" + path + "'");
  write(file);
  if (!file) throw ParseError("write failed for '" + path + "'");
}

void cmd_simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
  ExperimentConfig config;
  config.region = resolve_region(a.region, 0.5);
  config.n = a.n;
  config.k = a.k;
  config.c_grid = parse_list(a.c_grid, "--c-grid");
  config.replications = a.reps;
  config.seed = a.seed ? *a.seed : default_seed();
  try {
    config.process = parse_process(a.process);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--process: ") + e.what());
  }
  config.threads = a.threads;
  try {
    validate(config);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }

  const Summary summary = run_experiment(config);
  write_file_or_stdout(a.out, out, [&](std::ostream& o) { write_summary_csv(o, config, summary); });
  if (!a.trials_out.empty()) {
    write_file_or_stdout(a.trials_out, out, [&](std::ostream& o) {
      o << "trial,seed,rho_delta,rho_kappa,equal\n";
      for (const TrialResult& t : summary.trials) {
        o << t.trial_index << ',' << trial_seed(config, t.trial_index) << ','
          << format_g17(t.rho_delta) << ',' << format_g17(t.rho_kappa) << ','
          << (t.equal ? 1 : 0) << '\n';
      }
    });
  }
  if (a.out != "-") {
    err << "simulate: " << summary.replications << " trials, equal_fraction "
        << format_g17(summary.equal_fraction) << ", wrote " << a.out << '\n';
  }
}

void cmd_radius(const std::string& points_path, int k, std::ostream& out) {
  const std::vector<Point> points = read_points_file(points_path);
  RadiusResult result;
  try {
    result = critical_radii(points, k);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--k/--points: ") + e.what());
  }
  ordered_json doc;
  doc["rho_delta"] = result.rho_delta;
  doc["rho_kappa"] = result.rho_kappa;
  doc["k"] = result.k;
  doc["equal"] = result.equal;
  out << doc.dump(2) << '\n';
}

void cmd_regions(double width, std::ostream& out) {
  ordered_json list = ordered_json::array();
  for (const std::string& name : named_region_names()) {
    const ConvexRegion region = named_region(name, width);
    ordered_json item;
    item["name"] = name;
    item["kind"] = region.is_disk() ? "disk" : "polygon";
    if (name == "rect") item["params"] = {{"width", width}};
    item["area"] = region.area();
    item["perimeter"] = region.perimeter();
    list.push_back(item);
  }
  out << list.dump(2) << '\n';
}

struct SampleArgs {
  std::string region = "unit-square";
  double n = 100;
  std::optional<std::uint64_t> seed;
  std::string process = "uniform";
  std::string format = "csv";
  std::string out = "-";
};

void cmd_sample(const SampleArgs& a, std::ostream& out) {
  const ConvexRegion region = resolve_region(a.region, 0.5);
  const std::uint64_t seed = a.seed ? *a.seed : default_seed();
  Process process = Process::uniform;
  try {
    process = parse_process(a.process);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--process: ") + e.what());
  }
  if (process == Process::uniform && (a.n < 0.0 || a.n != std::floor(a.n))) {
    throw UsageError("--n: uniform sampling needs a nonnegative integer count");
  }
  const PointSet points = process == Process::uniform
                              ? sample_uniform(region, static_cast<std::size_t>(a.n), seed)
                              : sample_poisson(region, a.n, seed);
  write_file_or_stdout(a.out, out, [&](std::ostream& o) {
    if (a.format == "json") {
      write_points_json(o, points.points);
    } else {
      write_points_csv(o, points.points);
    }
  });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Critical transmission radii of random geometric graphs on unit-area convex regions",
               "critradius"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "critradius 1.0.0");

  PredictArgs predict;
  auto* predict_cmd = app.add_subcommand("predict", "Predicted critical radius r_n and limit probability");
  predict_cmd->add_option("--n", predict.n, "Number of nodes")->required()->check(CLI::Range(2.0, 1e300));
  predict_cmd->add_option("--k", predict.k, "Order k; the events are delta, kappa >= k+1")
      ->check(CLI::NonNegativeNumber);
  predict_cmd->add_option("--c", predict.c, "Offset c");
  auto* perimeter_opt =
      predict_cmd->add_option("--perimeter", predict.perimeter, "Boundary length of the unit-area region");
  predict_cmd->add_option("--region", predict.region, "Region JSON file or built-in name")
      ->excludes(perimeter_opt);

  IntegralArgs integral;
  auto* integral_cmd = app.add_subcommand("integral", "Two-zone evaluation of the expected-count integral");
  integral_cmd->add_option("--region", integral.region, "Region JSON file or built-in name")->required();
  integral_cmd->add_option("--n", integral.n, "Number of nodes")->required()->check(CLI::Range(3.0, 1e300));
  integral_cmd->add_option("--k", integral.k, "Order k")->check(CLI::NonNegativeNumber);
  integral_cmd->add_option("--c", integral.c, "Offset c");
  integral_cmd->add_option("--r", integral.r, "Radius override (default: predicted r_n)")
      ->check(CLI::PositiveNumber);
  integral_cmd->add_option("--cells", integral.cells, "Cell sizes a,b as fractions of r (interior, band)");
  integral_cmd->add_option("--band-width", integral.band_width, "Refinement depth in multiples of r");
  integral_cmd->add_option("--threads", integral.threads, "Worker threads (0 = all cores)");

  SimulateArgs simulate;
  auto* simulate_cmd = app.add_subcommand("simulate", "Replicated Monte Carlo estimate of the limit law");
  simulate_cmd->add_option("--region", simulate.region, "Region JSON file or built-in name")
      ->capture_default_str();
  simulate_cmd->add_option("--n", simulate.n, "Number of nodes")->capture_default_str();
  simulate_cmd->add_option("--k", simulate.k, "Order k; trials measure delta, kappa >= k+1")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  simulate_cmd->add_option("--c-grid", simulate.c_grid, "Comma-separated c values")->capture_default_str();
  simulate_cmd->add_option("--reps", simulate.reps, "Replications")->capture_default_str();
  simulate_cmd->add_option("--seed", simulate.seed, "Base seed (default: $RGG_SEED)");
  simulate_cmd->add_option("--process", simulate.process, "uniform | poisson")->capture_default_str();
  simulate_cmd->add_option("--out", simulate.out, "Summary CSV path, - for stdout")->capture_default_str();
  simulate_cmd->add_option("--trials-out", simulate.trials_out, "Optional per-trial CSV path");
  simulate_cmd->add_option("--threads", simulate.threads, "Worker threads (0 = all cores)");

  std::string points_path;
  int radius_k = 1;
  auto* radius_cmd = app.add_subcommand("radius", "Critical radii of a point set");
  radius_cmd->add_option("--points", points_path, "Point file: CSV with header x,y, or JSON array")
      ->required();
  radius_cmd->add_option("--k", radius_k, "Order: radii for delta >= k and kappa >= k")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  double regions_width = 0.5;
  auto* regions_cmd = app.add_subcommand("regions", "List built-in unit-area regions");
  regions_cmd->add_option("--width", regions_width, "Width of the rect entry")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  SampleArgs sample;
  auto* sample_cmd = app.add_subcommand("sample", "Draw a point set");
  sample_cmd->add_option("--region", sample.region, "Region JSON file or built-in name")
      ->capture_default_str();
  sample_cmd->add_option("--n", sample.n, "Count (uniform) or intensity (poisson)")->capture_default_str();
  sample_cmd->add_option("--seed", sample.seed, "Seed (default: $RGG_SEED)");
  sample_cmd->add_option("--process", sample.process, "uniform | poisson")->capture_default_str();
  sample_cmd->add_option("--format", sample.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sample_cmd->add_option("--out", sample.out, "Output path, - for stdout")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*predict_cmd) cmd_predict(predict, out);
    if (*integral_cmd) cmd_integral(integral, out);
    if (*simulate_cmd) cmd_simulate(simulate, out, err);
    if (*radius_cmd) cmd_radius(points_path, radius_k, out);
    if (*regions_cmd) cmd_regions(regions_width, out);
    if (*sample_cmd) cmd_sample(sample, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidRegion& e) {
    err << "error: invalid region: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace critradius
