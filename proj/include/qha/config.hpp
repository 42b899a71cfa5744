#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qha {

/// Invalid configuration; message names the offending field as section.key.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Run parameters, parsed from a plain-text file of `key = value` lines under
/// `[section]` headers; lists are comma-separated; `#` starts a comment.
struct RunConfig {
  // [space]
  int n = 1;
  int max_degree = 16;
  int quad_order = 0;  // 0 = automatic
  std::string space_kind = "fock";

  // [grid]
  double box_radius = 6.0;
  int grid_points = 256;

  // [subgroup]
  std::string subgroup_kind = "torus";
  std::vector<int> partition = {1};
  int angle_grid = 64;
  int mc_samples = 4096;

  // [symbols]
  std::vector<std::string> symbols = {"gaussian", "plane_wave", "shifted_gaussian",
                                      "cauchy_radial", "constant"};

  // [schedule]
  std::vector<double> t_schedule = {1.0, 0.5, 0.25};

  // [tolerances]
  double tol_scale = 1.0;

  // [run]
  unsigned long seed = 20240315;
  std::string out_dir = "out";
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Inverse of parse_config: parse(serialize(c)) reproduces c exactly.
std::string serialize_config(const RunConfig& config);

}  // namespace qha
