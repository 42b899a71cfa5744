#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qha/config.hpp"
#include "qha/serialize.hpp"
#include "qha/suites.hpp"

namespace {

int run(const qha::RunConfig& config, const std::string& out_dir, bool convergence,
        const std::string& name) {
  qha::SuiteResult result =
      convergence ? qha::run_convergence(config, name) : qha::run_suite(config, name);

  std::filesystem::create_directories(out_dir);
  const std::string report_path =
      out_dir + "/report_" + result.report.suite + ".json";
  qha::write_text_file(report_path, result.report.to_json().dump(2) + "\n");
  for (const auto& [table_name, table] : result.tables)
    qha::write_text_file(out_dir + "/" + table_name + ".csv", qha::error_table_csv(table));

  for (const qha::CheckRecord& r : result.report.records)
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << "  [" << r.anchor
              << "]  error=" << r.error << " tol=" << r.tol << "\n";
  std::cout << (result.report.all_pass() ? "all checks passed" : "some checks FAILED")
            << " (" << report_path << ")\n";
  return result.report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for convolutions of functions and operators on "
               "truncated Fock and Bergman spaces"};
  app.require_subcommand(1);

  std::string config_path, out_flag, suite_name, study_name;
  unsigned long seed = 0;
  double tol_scale = 0.0;
  bool seed_set = false, tol_set = false;

  app.add_option("--seed", seed, "override the configured random seed")
      ->each([&](const std::string&) { seed_set = true; });
  app.add_option("--tol-scale", tol_scale, "multiply all tolerances by this factor")
      ->each([&](const std::string&) { tol_set = true; });

  CLI::App* suite = app.add_subcommand("suite", "run a verification suite");
  suite->add_option("name", suite_name, "core, conv, groups, wiener, bergman, or all")
      ->required();
  suite->add_option("--config", config_path, "configuration file")->required();
  suite->add_option("--out", out_flag, "output directory");

  CLI::App* converge = app.add_subcommand("converge", "run a convergence study");
  converge->add_option("study", study_name, "sot, approx_identity, or truncation")->required();
  converge->add_option("--config", config_path, "configuration file")->required();
  converge->add_option("--out", out_flag, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    qha::RunConfig config = qha::load_config(config_path);
    if (seed_set) config.seed = seed;
    if (tol_set) {
      if (tol_scale <= 0.0) throw qha::ConfigError("--tol-scale must be positive");
      config.tol_scale *= tol_scale;
    }

    std::string out_dir = config.out_dir;
    if (const char* env = std::getenv("QHA_OUT_DIR")) out_dir = env;
    if (!out_flag.empty()) out_dir = out_flag;

    if (suite->parsed()) return run(config, out_dir, false, suite_name);
    return run(config, out_dir, true, study_name);
  } catch (const qha::ConfigError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
