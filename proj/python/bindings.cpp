#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "platemps/bessel.hpp"
#include "platemps/config.hpp"
#include "platemps/oracle.hpp"
#include "platemps/runner.hpp"

namespace py = pybind11;
using namespace platemps;

namespace {

struct ModeSummary {
  double k_star;
  double omega_star;
  int multiplicity;
  double tension_at_min;
};

struct RunSummary {
  int exit_code;
  std::vector<std::string> warnings;
  std::string out_dir;
  std::vector<double> ks;
  std::vector<std::vector<double>> taus;
  std::vector<ModeSummary> modes;
};

RunSummary run_summary(const RunConfig& config, int threads) {
  RunOptions options;
  options.threads = threads;
  const RunResult res = run(config, options);
  RunSummary out;
  out.exit_code = res.exit_code;
  out.warnings = res.warnings;
  out.out_dir = res.out_dir;
  out.ks = res.curve.ks;
  out.taus.resize(res.curve.ks.size());
  for (std::size_t i = 0; i < res.curve.ks.size(); ++i)
    for (Eigen::Index b = 0; b < res.curve.taus.cols(); ++b)
      out.taus[i].push_back(res.curve.taus(static_cast<Eigen::Index>(i), b));
  for (const ModeResult& m : res.modes)
    out.modes.push_back({m.k_star, m.omega_star, m.multiplicity, m.tension_at_min});
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Plate eigenfrequencies and eigenmodes by the method of particular solutions";

  py::register_exception<ConfigError>(m, "ConfigError");

  py::enum_<BcTag>(m, "BcTag")
      .value("clamped", BcTag::Clamped)
      .value("simply_supported", BcTag::SimplySupported)
      .value("free", BcTag::Free);

  py::class_<PlateMaterial>(m, "PlateMaterial")
      .def(py::init<>())
      .def_readwrite("D", &PlateMaterial::D)
      .def_readwrite("rho", &PlateMaterial::rho)
      .def_readwrite("h", &PlateMaterial::h)
      .def_readwrite("T", &PlateMaterial::T)
      .def_readwrite("nu", &PlateMaterial::nu);

  py::class_<SplitWavenumbers>(m, "SplitWavenumbers")
      .def_readonly("lambda1", &SplitWavenumbers::lambda1)
      .def_readonly("lambda2", &SplitWavenumbers::lambda2)
      .def_readonly("k1", &SplitWavenumbers::k1)
      .def_readonly("k2", &SplitWavenumbers::k2)
      .def_readonly("delta_lambda", &SplitWavenumbers::delta_lambda)
      .def_readonly("omega", &SplitWavenumbers::omega);

  m.def("split_wavenumbers", &split_wavenumbers, py::arg("material"), py::arg("omega"));
  m.def("omega_from_scan_k", &omega_from_scan_k, py::arg("material"), py::arg("k"));
  m.def("bessel_j", &bessel_j, py::arg("n"), py::arg("z"));
  m.def("bessel_i", &bessel_i, py::arg("n"), py::arg("z"));

  py::class_<StarDomain>(m, "StarDomain")
      .def("area", &StarDomain::area)
      .def("perimeter", &StarDomain::perimeter)
      .def("diameter", &StarDomain::diameter)
      .def("contains", [](const StarDomain& d, double x, double y) { return d.contains({x, y}); })
      .def("bbox",
           [](const StarDomain& d) {
             return std::make_tuple(d.bbox_lo().x, d.bbox_lo().y, d.bbox_hi().x, d.bbox_hi().y);
           })
      .def("star_shaped_wrt_origin", &StarDomain::star_shaped_wrt_origin);

  m.def("make_circle", &make_circle, py::arg("radius"));
  m.def("make_paper_shape2", &make_paper_shape2);

  m.def(
      "interior_points",
      [](const StarDomain& d, int n, std::uint64_t seed) {
        const InteriorSampleSet set = sample_interior(d, n, seed);
        std::vector<std::pair<double, double>> pts;
        pts.reserve(set.points.size());
        for (const Vec2& p : set.points) pts.emplace_back(p.x, p.y);
        return pts;
      },
      py::arg("domain"), py::arg("n"), py::arg("seed"));

  m.def(
      "disk_eigenvalues",
      [](const std::string& bc, double nu, double radius, int n_max, double k_max) {
        std::vector<std::tuple<double, int, int>> out;
        for (const DiskRoot& r :
             disk_eigenvalues(bc_tag_from_string(bc), nu, radius, n_max, k_max))
          out.emplace_back(r.k, r.n, r.multiplicity);
        return out;
      },
      py::arg("bc"), py::arg("nu") = 0.33, py::arg("radius") = 1.0, py::arg("n_max") = 8,
      py::arg("k_max") = 8.0);

  m.def(
      "disk_mode_coefficients",
      [](const std::string& bc, double nu, double k_root, int n, double radius) {
        return disk_mode_coefficients(bc_tag_from_string(bc), nu, k_root, n, radius);
      },
      py::arg("bc"), py::arg("nu"), py::arg("k_root"), py::arg("n"), py::arg("radius") = 1.0);

  py::class_<RunConfig>(m, "RunConfig")
      .def(py::init<>())
      .def_readwrite("domain_kind", &RunConfig::domain_kind)
      .def_readwrite("radius", &RunConfig::radius)
      .def_readwrite("material", &RunConfig::material)
      .def_readwrite("boundary_n", &RunConfig::boundary_n)
      .def_readwrite("interior_n", &RunConfig::interior_n)
      .def_readwrite("seed", &RunConfig::seed)
      .def_readwrite("k_min", &RunConfig::k_min)
      .def_readwrite("k_max", &RunConfig::k_max)
      .def_readwrite("step", &RunConfig::step)
      .def_readwrite("branches", &RunConfig::branches)
      .def_readwrite("dip_ratio", &RunConfig::dip_ratio)
      .def_readwrite("reg_eps", &RunConfig::reg_eps)
      .def_readwrite("out_dir", &RunConfig::out_dir)
      .def_readwrite("raster", &RunConfig::raster);

  m.def("parse_config_file", &parse_config_file, py::arg("path"));
  m.def("parse_config_text", &parse_config_text, py::arg("text"), py::arg("name") = "<config>");
  m.def("serialize_config", &serialize_config, py::arg("config"));

  py::class_<ModeSummary>(m, "Mode")
      .def_readonly("k_star", &ModeSummary::k_star)
      .def_readonly("omega_star", &ModeSummary::omega_star)
      .def_readonly("multiplicity", &ModeSummary::multiplicity)
      .def_readonly("tension_at_min", &ModeSummary::tension_at_min);

  py::class_<RunSummary>(m, "RunSummary")
      .def_readonly("exit_code", &RunSummary::exit_code)
      .def_readonly("warnings", &RunSummary::warnings)
      .def_readonly("out_dir", &RunSummary::out_dir)
      .def_readonly("ks", &RunSummary::ks)
      .def_readonly("taus", &RunSummary::taus)
      .def_readonly("modes", &RunSummary::modes);

  m.def("run", &run_summary, py::arg("config"), py::arg("threads") = 1,
        "Scan, detect minima, refine and export; returns a summary.");
}
