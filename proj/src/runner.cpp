#include "platemps/runner.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace platemps {

namespace {

std::string fmt17(double v) {
  if (std::isnan(v)) return "NaN";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

std::string tension_curve_csv(const TensionCurve& curve) {
  std::string s = "k";
  for (Eigen::Index b = 0; b < curve.taus.cols(); ++b)
    s += ",tau_" + std::to_string(b + 1);
  s += ",g_condition\n";
  for (std::size_t i = 0; i < curve.ks.size(); ++i) {
    s += fmt17(curve.ks[i]);
    for (Eigen::Index b = 0; b < curve.taus.cols(); ++b)
      s += "," + fmt17(curve.taus(static_cast<Eigen::Index>(i), b));
    s += "," + fmt17(curve.g_conditions[i]) + "\n";
  }
  return s;
}

std::string eigenfrequencies_csv(const std::vector<ModeResult>& modes) {
  std::string s = "k_star,omega_star,multiplicity,tension_at_min\n";
  for (const ModeResult& m : modes)
    s += fmt17(m.k_star) + "," + fmt17(m.omega_star) + "," + std::to_string(m.multiplicity) +
         "," + fmt17(m.tension_at_min) + "\n";
  return s;
}

std::string mode_csv(const ModeField& field) {
  std::string s = "x,y,value\n";
  for (int iy = 0; iy < field.n; ++iy)
    for (int ix = 0; ix < field.n; ++ix)
      s += fmt17(field.xs[ix]) + "," + fmt17(field.ys[iy]) + "," +
           fmt17(field.values(iy, ix)) + "\n";
  return s;
}

}  // namespace

StarDomain domain_from_config(const RunConfig& config) {
  if (config.domain_kind == "circle") return make_circle(config.radius);
  if (config.domain_kind == "paper-shape2") return make_paper_shape2();
  TrigCurve c;
  c.xc = config.x_cos;
  c.xs = config.x_sin;
  c.yc = config.y_cos;
  c.ys = config.y_sin;
  return StarDomain(std::move(c));
}

ScanSetup setup_from_config(const RunConfig& config, const StarDomain& domain) {
  ScanSetup setup;
  setup.material = config.material;
  setup.basis_kind = config.basis_kind;
  setup.count_per_k = config.count_per_k > 0.0 ? config.count_per_k : 4.0 * domain.diameter();
  setup.count_total = config.count;
  setup.count_osc = config.count_osc;
  setup.count_eva = config.count_eva;
  setup.precondition = config.precondition;
  setup.branches = config.branches;
  setup.reg_eps = config.reg_eps;
  setup.boundary = sample_boundary(domain, config.boundary_n, config.bc);
  setup.interior = sample_interior(domain, config.interior_n, config.seed);
  return setup;
}

RunResult run(RunConfig config, const RunOptions& options) {
  RunResult result;
  if (const char* env = std::getenv("PLATE_MPS_SEED")) {
    try {
      config.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw ConfigError("PLATE_MPS_SEED", 0, "must be a non-negative integer");
    }
  }
  if (options.validate_only) return result;

  const StarDomain domain = domain_from_config(config);
  if (!domain.star_shaped_wrt_origin())
    result.warnings.push_back("domain star-shapedness check failed (advisory)");

  const ScanSetup setup = setup_from_config(config, domain);

  result.curve = scan(setup, config.k_min, config.k_max, config.step,
                      std::max(1, options.threads));
  for (const auto& [k, msg] : result.curve.failures)
    result.warnings.push_back("scan: skipped k = " + fmt17(k) + ": " + msg);

  if (!result.curve.ks.empty()) {
    const auto minima = find_minima(result.curve, config.dip_ratio);
    for (const MinimumCandidate& c : minima) {
      try {
        result.modes.push_back(refine_minimum(setup, result.curve, c));
      } catch (const std::exception& e) {
        result.warnings.push_back("refine: skipped minimum at k = " +
                                  fmt17(result.curve.ks[c.index]) + ": " + e.what());
      }
    }
  }

  const std::filesystem::path dir(config.out_dir);
  std::filesystem::create_directories(dir);
  result.out_dir = dir.string();
  write_file(dir / "tension_curve.csv", tension_curve_csv(result.curve));
  write_file(dir / "eigenfrequencies.csv", eigenfrequencies_csv(result.modes));
  if (config.raster > 0) {
    for (std::size_t i = 0; i < result.modes.size(); ++i) {
      const ModeResult& m = result.modes[i];
      for (Eigen::Index b = 0; b < m.coefficients.cols(); ++b) {
        const ModeField field =
            evaluate_mode(domain, m.basis, m.coefficients.col(b), config.raster);
        write_file(dir / ("mode_" + std::to_string(i) + "_" + std::to_string(b) + ".csv"),
                   mode_csv(field));
      }
    }
  }

  const bool all_failed = result.curve.ks.empty();
  std::string manifest = "# plate-mps run manifest\n";
  manifest += "# version = ";
  manifest += kVersion;
  manifest += "\n# status = ";
  manifest += all_failed ? "failed" : (result.warnings.empty() ? "ok" : "partial");
  manifest += "\n";
  for (const std::string& w : result.warnings) manifest += "# warning = " + w + "\n";
  manifest += serialize_config(config);
  write_file(dir / "run_manifest.txt", manifest);

  result.exit_code = all_failed ? 3 : 0;
  return result;
}

}  // namespace platemps
