#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spiralkit::cli {

enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kUsageError = 2 };

struct RunConfig {
  std::string command;
  std::vector<std::string> input_paths;
  std::string output_path;  // empty: stdout
  std::vector<double> grid_radii;
  std::size_t grid_angles = 0;  // 0: default grid
  double rho = 0.999;
  double r_inner = 0.95;
  std::size_t samples = 0;  // 0: command default
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
};

/// Runs one subcommand; returns the process exit status.
int run(int argc, const char* const* argv);
/// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args);

}  // namespace spiralkit::cli
