#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "plot_output.hpp"
#include "spiralkit/covering_geometry.hpp"
#include "spiralkit/json_io.hpp"

namespace spiralkit::cli {

namespace {

using nlohmann::json;

// Malformed input or parameters; maps to exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

FunctionSpec read_function(const std::string& path) {
  try {
    return function_from_json(read_json(path));
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  if (!out) throw UsageError("write failed for " + path);
}

GridSpec grid_from(const RunConfig& config) {
  GridSpec grid = GridSpec::default_grid();
  if (!config.grid_radii.empty()) grid.radii = config.grid_radii;
  if (config.grid_angles != 0) grid.angles_per_ring = config.grid_angles;
  try {
    grid.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return grid;
}

Complex parse_mu(const std::vector<double>& values) {
  if (values.empty() || values.size() > 2) throw UsageError("--mu takes re[,im]");
  return {values[0], values.size() == 2 ? values[1] : 0.0};
}

int emit_reports(const RunConfig& config, const std::vector<VerificationReport>& reports) {
  write_output(config.output_path, reports_to_json(reports).dump(2) + "\n");
  for (const auto& report : reports) {
    if (!report.passed) return kCheckFailed;
  }
  return kSuccess;
}

int cmd_construct(const RunConfig& config, const std::vector<double>& mu, double beta, std::size_t atoms) {
  ClassParams params = [&] {
    try {
      return ClassParams(parse_mu(mu), beta);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  AtomicCircleMeasure measure = [&] {
    if (!config.input_paths.empty()) {
      try {
        return measure_from_json(read_json(config.input_paths.front()));
      } catch (const json::exception& e) {
        throw UsageError(e.what());
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    if (atoms == 0) throw UsageError("construct: give --input measure.json or --atoms N");
    return random_measure(atoms, config.seed);
  }();
  const FunctionSpec spec{params, construct(params, measure)};
  json doc = function_to_json(spec);
  doc["measure"] = measure_to_json(measure);
  // "measure" takes precedence on reload, so the file stays self-consistent.
  write_output(config.output_path, doc.dump(2) + "\n");
  return kSuccess;
}

int cmd_check(const RunConfig& config, bool all_checks) {
  const auto spec = read_function(config.input_paths.front());
  const GridSpec grid = grid_from(config);
  if (all_checks) return emit_reports(config, run_all_checks(spec.f, spec.params, grid));
  return emit_reports(config, {check_membership(spec.f, spec.params, grid, config.tolerance)});
}

int cmd_distort(const RunConfig& config) {
  const auto spec = read_function(config.input_paths.front());
  const GridSpec grid = grid_from(config);
  const double tol = config.tolerance;
  std::vector<VerificationReport> reports{
      check_distortion(spec.f, spec.params, grid, tol),     check_union_identity(spec.f, spec.params, grid, tol),
      check_derivative_disk(spec.f, spec.params, grid, tol), check_modulus_bounds(spec.f, spec.params, grid, tol),
      check_arg_bound(spec.f, spec.params, grid, tol),
  };
  if (spec.params.real_mu()) {
    reports.push_back(check_f_bounds(spec.f, spec.params, grid, tol));
    if (spec.params.mu().real() <= 2.0) reports.push_back(check_derivative_bounds(spec.f, spec.params, grid, tol));
  }
  return emit_reports(config, reports);
}

int cmd_cover(const RunConfig& config) {
  const auto spec = read_function(config.input_paths.front());
  const std::size_t m = config.samples == 0 ? 512 : config.samples;
  VerificationReport report = [&] {
    try {
      return check_covering(spec.f, spec.params, config.r_inner, config.rho, m);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  json doc = report_to_json(report);
  doc["r_inner"] = round_significant(config.r_inner);
  doc["rho_outer"] = round_significant(config.rho);
  write_output(config.output_path, json::array({doc}).dump(2) + "\n");
  return report.passed ? kSuccess : kCheckFailed;
}

int cmd_radius_table(const RunConfig& config) {
  const std::size_t n = config.samples == 0 ? 64 : config.samples;
  std::ostringstream out;
  out << "s,r,numeric,chen_owa,ratio\n";
  for (std::size_t k = 1; k <= n; ++k) {
    const double s = 2.0 * static_cast<double>(k) / static_cast<double>(n);
    const double r = covering_radius(s);
    const double numeric = std::sqrt(minimize_a_s(s).value);
    const double chen_owa = s / 4.0;
    out << format_number(s) << ',' << format_number(r) << ',' << format_number(numeric) << ','
        << format_number(chen_owa) << ',' << format_number(r / chen_owa) << '\n';
  }
  write_output(config.output_path, out.str());
  return kSuccess;
}

int cmd_render(const RunConfig& config, bool overlay_f0, bool covering_disk, bool wedge,
               const std::string& csv_prefix) {
  if (config.input_paths.empty()) throw UsageError("render: no function specs given");
  if (config.input_paths.size() > 4) throw UsageError("render: at most 4 curves");
  static const char* const kColors[] = {"#1f77b4", "#d62728", "#9467bd", "#ff7f0e", "#17becf"};

  std::vector<FunctionSpec> specs;
  for (const auto& path : config.input_paths) specs.push_back(read_function(path));

  Scene scene;
  std::size_t color = 0;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    scene.curves.push_back({boundary_curve(specs[i].f, config.rho), kColors[color++], config.input_paths[i]});
  }
  const ClassParams& params = specs.front().params;
  if (overlay_f0) {
    scene.curves.push_back({boundary_curve(covering_function(params), config.rho), kColors[color++],
                            "f0 = (1-z)^(mu beta)", true});
  }
  if (covering_disk) {
    const Complex s = params.mu() * params.beta();
    if (!params.real_mu() || !(s.real() > 0.0 && s.real() <= 2.0)) {
      throw UsageError("render: covering disk needs real mu with mu*beta in (0, 2]");
    }
    scene.disk = Disk({1.0, 0.0}, covering_radius(s.real()));
  }
  if (wedge) {
    const auto& f = specs.front().f;
    const Complex nu = f.has_interior_nodes() ? radial_nu(f) : compute_nu(f);
    const double a = f.has_interior_nodes() ? radial_a(f, nu) : compute_a(f, nu);
    double extent = 0.0;
    for (const auto& styled : scene.curves) {
      for (Complex p : styled.curve.points()) extent = std::max(extent, std::abs(p));
    }
    const double t_lo = -std::log(4.0 * extent) / nu.real();
    const double t_hi = -std::log(1e-3 * extent) / nu.real();
    auto [upper, lower] = wedge_spirals(nu, a, t_lo, t_hi, 2048);
    scene.overlays.push_back({std::move(upper), "#7f7f7f", "spiral w+", true});
    scene.overlays.push_back({std::move(lower), "#7f7f7f", "spiral w-", true});
  }

  write_output(config.output_path, render_svg(scene));
  if (!csv_prefix.empty()) {
    for (std::size_t i = 0; i < scene.curves.size(); ++i) {
      write_output(csv_prefix + "_" + std::to_string(i) + ".csv", polyline_csv(scene.curves[i].curve));
    }
  }
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"spiralkit: boundary-spirallike function toolkit"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--grid-radii", config.grid_radii, "Ring radii in (0, 0.999]")->delimiter(',');
    sub->add_option("--grid-angles", config.grid_angles, "Samples per ring");
    sub->add_option("--tolerance", config.tolerance, "Pass tolerance on margins");
  };
  auto add_io = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-i,--input", config.input_paths, "Input JSON");
    if (required) opt->required();
    sub->add_option("-o,--output", config.output_path, "Output path (default stdout)");
  };

  std::vector<double> mu{1.0};
  double beta = 0.0;
  std::size_t atoms = 0;
  auto* construct_cmd = app.add_subcommand("construct", "Build a function spec from a measure");
  add_io(construct_cmd, false);
  construct_cmd->add_option("--mu", mu, "mu as re[,im]")->delimiter(',');
  construct_cmd->add_option("--beta", beta, "Order beta in [0, 1)");
  construct_cmd->add_option("--atoms", atoms, "Random measure with this many atoms");
  construct_cmd->add_option("--seed", config.seed, "Random seed");

  bool all_checks = false;
  auto* check_cmd = app.add_subcommand("check", "Verify class membership on a grid");
  add_io(check_cmd, true);
  add_grid(check_cmd);
  check_cmd->add_flag("--all", all_checks, "Run every applicable check");

  auto* distort_cmd = app.add_subcommand("distort", "Verify the distortion theorems on a grid");
  add_io(distort_cmd, true);
  add_grid(distort_cmd);

  auto* cover_cmd = app.add_subcommand("cover", "Certify f0 = (1-z)^(mu beta) inside f");
  add_io(cover_cmd, true);
  cover_cmd->add_option("--rho", config.rho, "Outer radius");
  cover_cmd->add_option("--r-inner", config.r_inner, "Inner radius for f0");
  cover_cmd->add_option("--samples", config.samples, "Number of f0 boundary samples");

  auto* table_cmd = app.add_subcommand("radius-table", "Covering radius vs numeric minimum vs s/4");
  table_cmd->add_option("-o,--output", config.output_path, "Output CSV (default stdout)");
  table_cmd->add_option("--samples", config.samples, "Number of s values in (0, 2]");

  bool overlay_f0 = false, covering_disk = false, wedge = false;
  std::string csv_prefix;
  auto* render_cmd = app.add_subcommand("render", "Render image-domain curves to SVG");
  add_io(render_cmd, false);
  render_cmd->add_option("--rho", config.rho, "Radius of the sampled circle");
  render_cmd->add_flag("--overlay-f0", overlay_f0, "Add the covering function of the first spec");
  render_cmd->add_flag("--covering-disk", covering_disk, "Draw |w - 1| = r(mu beta)");
  render_cmd->add_flag("--wedge", wedge, "Draw the bounding spirals of the first spec");
  render_cmd->add_option("--csv-prefix", csv_prefix, "Also write each curve to PREFIX_i.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kUsageError;
  }

  config.command = app.get_subcommands().front()->get_name();
  try {
    if (config.command == "construct") return cmd_construct(config, mu, beta, atoms);
    if (config.command == "check") return cmd_check(config, all_checks);
    if (config.command == "distort") return cmd_distort(config);
    if (config.command == "cover") return cmd_cover(config);
    if (config.command == "radius-table") return cmd_radius_table(config);
    if (config.command == "render") return cmd_render(config, overlay_f0, covering_disk, wedge, csv_prefix);
  } catch (const std::exception& e) {
    std::cerr << "spiralkit: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("spiralkit");
  for (const auto& arg : args) argv.push_back(arg.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace spiralkit::cli
