#pragma once

#include <string>
#include <vector>

#include "platemps/config.hpp"
#include "platemps/solver.hpp"

namespace platemps {

inline constexpr const char* kVersion = "0.1.0";

struct RunOptions {
  int threads = 1;
  bool validate_only = false;
};

struct RunResult {
  int exit_code = 0;  // 0 ok (possibly with warnings), 3 every grid point failed
  std::vector<std::string> warnings;
  TensionCurve curve;
  std::vector<ModeResult> modes;
  std::string out_dir;
};

/// Scan, detect, refine, export. Writes tension_curve.csv,
/// eigenfrequencies.csv, mode_<idx>_<branch>.csv and run_manifest.txt into
/// config.out_dir. PLATE_MPS_SEED overrides the config seed.
RunResult run(RunConfig config, const RunOptions& options = {});

/// Domain named by the config (circle, paper-shape2 or trig coefficients).
StarDomain domain_from_config(const RunConfig& config);

/// Samples the domain and fills a ScanSetup exactly the way run() does.
ScanSetup setup_from_config(const RunConfig& config, const StarDomain& domain);

}  // namespace platemps
