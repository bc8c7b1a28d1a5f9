#include <CLI11.hpp>
#include <cstdio>
#include <exception>
#include <iostream>

#include "platemps/config.hpp"
#include "platemps/oracle.hpp"
#include "platemps/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Plate eigenfrequencies and eigenmodes by the method of particular solutions"};
  app.require_subcommand(1);

  std::string config_path;
  int threads = 1;
  bool validate_only = false;
  CLI::App* run_cmd = app.add_subcommand("run", "Scan a wavenumber window and export results");
  run_cmd->add_option("config", config_path, "path to a key = value config file")->required();
  run_cmd->add_option("--threads", threads, "worker pool size (output is independent of it)");
  run_cmd->add_flag("--validate-only", validate_only, "parse and echo the config, no numerics");

  std::string bc_name = "clamped";
  double nu = 0.33, kmax = 8.0, radius = 1.0;
  int nmax = 8;
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "Analytic circular-plate eigenvalues (CSV on stdout)");
  oracle_cmd->add_option("bc", bc_name, "clamped | simply-supported | free")->required();
  oracle_cmd->add_option("--nu", nu, "Poisson ratio");
  oracle_cmd->add_option("--kmax", kmax, "upper wavenumber bound");
  oracle_cmd->add_option("--nmax", nmax, "largest angular order");
  oracle_cmd->add_option("--radius", radius, "plate radius");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      const platemps::RunConfig config = platemps::parse_config_file(config_path);
      if (validate_only) {
        std::cout << platemps::serialize_config(config);
        return 0;
      }
      platemps::RunOptions options;
      options.threads = threads;
      const platemps::RunResult result = platemps::run(config, options);
      for (const std::string& w : result.warnings) std::cerr << "warning: " << w << "\n";
      std::cout << "scanned " << result.curve.ks.size() << " k-points, found "
                << result.modes.size() << " modes; outputs in " << result.out_dir << "\n";
      return result.exit_code;
    }
    const platemps::BcTag tag = platemps::bc_tag_from_string(bc_name);
    std::printf("k,n,multiplicity\n");
    for (const platemps::DiskRoot& r : platemps::disk_eigenvalues(tag, nu, radius, nmax, kmax))
      std::printf("%.10g,%d,%d\n", r.k, r.n, r.multiplicity);
    return 0;
  } catch (const platemps::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
