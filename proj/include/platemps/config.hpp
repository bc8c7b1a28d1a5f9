#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "platemps/basis.hpp"
#include "platemps/geometry.hpp"

namespace platemps {

/// Config problem with a file:line locus.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string file, int line, const std::string& message)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + message),
        file_(std::move(file)),
        line_(line) {}
  const std::string& file() const { return file_; }
  int line() const { return line_; }

 private:
  std::string file_;
  int line_;
};

// Flat `key = value` run configuration with dotted section keys. Parsing
// keeps the source line of every key so validation errors point at it.
struct RunConfig {
  // domain
  std::string domain_kind = "circle";  // circle | paper-shape2 | trig
  double radius = 1.0;
  std::vector<double> x_cos, x_sin, y_cos, y_sin;  // trig curve coefficients

  PlateMaterial material;

  // bc: either a single tag or a list of [t0, t1) arcs
  BcMap bc = BcMap::uniform(BcTag::Clamped);

  // basis
  BasisKind basis_kind = BasisKind::PlaneWave;
  double count_per_k = 0.0;  // 0 -> default 4 * domain diameter
  int count = 0;             // explicit total override
  int count_osc = 0, count_eva = 0;
  bool precondition = false;

  // sampling
  int boundary_n = 2048;
  int interior_n = 1024;
  std::uint64_t seed = 1;
  // hook for boundary-weighted interior sampling; only "uniform" exists
  std::string interior_density = "uniform";

  // scan
  double k_min = 0.0, k_max = 0.0, step = 0.01;
  int branches = 4;
  double dip_ratio = 0.1;
  double reg_eps = 1e-12;

  // outputs
  std::string out_dir = "out";
  int raster = 64;
};

RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text, const std::string& name = "<config>");

/// Canonical echo of a fully resolved config; parses back to the same run.
std::string serialize_config(const RunConfig& config);

}  // namespace platemps
