#include "platemps/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>

#include "platemps/assembly.hpp"

namespace platemps {

namespace {

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  double hi = v[mid];
  if (v.size() % 2 == 0) {
    std::nth_element(v.begin(), v.begin() + mid - 1, v.begin() + mid);
    return 0.5 * (v[mid - 1] + hi);
  }
  return hi;
}

double log_floor(double tau) { return std::log(std::max(tau, 1e-300)); }

}  // namespace

void ScanSetup::resolve_counts(double k, int& osc, int& eva) const {
  int total = count_total > 0 ? count_total : static_cast<int>(std::ceil(count_per_k * k));
  total = std::max(total, 2);
  total += total % 2;
  osc = total / 2;
  eva = total / 2;
  if (count_osc > 0) osc = count_osc;
  if (count_eva > 0) eva = count_eva;
}

PointSolve solve_at(const ScanSetup& setup, double k) {
  if (!(k > 0.0)) throw std::invalid_argument("solve_at: k must be positive");
  const double omega = omega_from_scan_k(setup.material, k);
  const SplitWavenumbers split = split_wavenumbers(setup.material, omega);
  int osc = 0, eva = 0;
  setup.resolve_counts(k, osc, eva);
  PointSolve out;
  out.k = k;
  out.basis = build_basis(setup.basis_kind, split, osc, eva, setup.boundary, k);
  if (setup.precondition && setup.basis_kind == BasisKind::PlaneWave)
    out.basis = dft_precondition(out.basis);
  const GramPair pair = assemble(out.basis, setup.boundary, setup.interior, setup.material);
  const int m = std::min<int>(setup.branches, out.basis.total());
  out.solution = smallest_tensions(pair, m, setup.reg_eps);
  return out;
}

TensionCurve scan(const ScanSetup& setup, double k_min, double k_max, double step, int threads) {
  if (!(k_min < k_max) || !(step > 0.0))
    throw std::invalid_argument("scan: need k_min < k_max and positive step");
  std::vector<double> grid;
  for (double k = k_min; k <= k_max + 0.5 * step; k += step) grid.push_back(k);

  struct Slot {
    bool ok = false;
    Eigen::VectorXd taus;
    double g_condition = 0.0;
    std::string error;
  };
  std::vector<Slot> slots(grid.size());

  auto work = [&](std::size_t i) {
    try {
      const PointSolve ps = solve_at(setup, grid[i]);
      slots[i].ok = true;
      slots[i].taus = ps.solution.taus;
      slots[i].g_condition = ps.solution.g_condition;
    } catch (const std::exception& e) {
      slots[i].error = e.what();
    }
  };

  if (threads <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const int nthreads = std::min<std::size_t>(threads, grid.size());
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < grid.size(); i = next.fetch_add(1)) work(i);
      });
    for (std::thread& t : pool) t.join();
  }

  TensionCurve curve;
  int m = 0;
  for (const Slot& s : slots)
    if (s.ok) m = std::max<int>(m, static_cast<int>(s.taus.size()));
  curve.taus.resize(0, m);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!slots[i].ok) {
      curve.failures.emplace_back(grid[i], slots[i].error);
      continue;
    }
    const Eigen::Index row = curve.taus.rows();
    curve.taus.conservativeResize(row + 1, m);
    curve.taus.row(row).setConstant(std::numeric_limits<double>::quiet_NaN());
    curve.taus.row(row).head(slots[i].taus.size()) = slots[i].taus;
    curve.ks.push_back(grid[i]);
    curve.g_conditions.push_back(slots[i].g_condition);
  }
  return curve;
}

std::vector<MinimumCandidate> find_minima(const TensionCurve& curve, double dip_ratio) {
  std::vector<MinimumCandidate> out;
  const auto n = static_cast<Eigen::Index>(curve.ks.size());
  if (n < 3) return out;
  const Eigen::Index m = curve.taus.cols();
  std::vector<double> med(m);
  for (Eigen::Index b = 0; b < m; ++b) {
    std::vector<double> col;
    col.reserve(n);
    for (Eigen::Index i = 0; i < n; ++i)
      if (std::isfinite(curve.taus(i, b))) col.push_back(curve.taus(i, b));
    med[b] = median(std::move(col));
  }
  for (Eigen::Index j = 1; j + 1 < n; ++j) {
    const double t = curve.taus(j, 0);
    if (!(t < curve.taus(j - 1, 0)) || !(t < curve.taus(j + 1, 0))) continue;
    if (!(t < dip_ratio * med[0])) continue;
    MinimumCandidate c;
    c.index = static_cast<int>(j);
    c.multiplicity = 0;
    for (Eigen::Index b = 0; b < m; ++b)
      if (curve.taus(j, b) < dip_ratio * med[b]) ++c.multiplicity;
    c.multiplicity = std::max(c.multiplicity, 1);
    out.push_back(c);
  }
  return out;
}

double parabola_vertex(double x0, double y0, double x1, double y1, double x2, double y2) {
  const double den = (y0 - y1) * (x2 - x1) + (y2 - y1) * (x1 - x0);
  if (!std::isfinite(den) || den <= 0.0) return x1;
  const double num = (y0 - y1) * (x2 - x1) * (x2 - x1) - (y2 - y1) * (x1 - x0) * (x1 - x0);
  const double v = x1 + 0.5 * num / den;
  return (v > x0 && v < x2) ? v : x1;
}

ModeResult refine_minimum(const ScanSetup& setup, const TensionCurve& curve,
                          const MinimumCandidate& candidate) {
  const int j = candidate.index;
  if (j <= 0 || j + 1 >= static_cast<int>(curve.ks.size()))
    throw std::invalid_argument("refine_minimum: candidate must be an interior grid point");
  const double x0 = curve.ks[j - 1], x1 = curve.ks[j], x2 = curve.ks[j + 1];
  const double k_vertex = parabola_vertex(x0, log_floor(curve.taus(j - 1, 0)), x1,
                                          log_floor(curve.taus(j, 0)), x2,
                                          log_floor(curve.taus(j + 1, 0)));

  PointSolve best = solve_at(setup, x1);
  if (k_vertex != x1) {
    PointSolve at_vertex = solve_at(setup, k_vertex);
    if (at_vertex.solution.taus(0) < best.solution.taus(0)) best = std::move(at_vertex);
  }

  ModeResult mode;
  mode.k_star = best.k;
  mode.omega_star = omega_from_scan_k(setup.material, best.k);
  mode.multiplicity = std::min<int>(candidate.multiplicity, best.solution.vectors.cols());
  mode.coefficients = best.solution.vectors.leftCols(mode.multiplicity);
  mode.tension_at_min = best.solution.taus(0);
  mode.basis = std::move(best.basis);
  return mode;
}

Eigen::VectorXcd mode_values(const BasisSet& basis, const Eigen::VectorXcd& coefficients,
                             const std::vector<Vec2>& points) {
  const EvalTable t = eval_basis(basis, points, 0);
  return t.deriv(0, 0) * coefficients;
}

ModeField evaluate_mode(const StarDomain& domain, const BasisSet& basis,
                        const Eigen::VectorXcd& coefficients, int raster_n) {
  if (raster_n < 2) throw std::invalid_argument("evaluate_mode: raster must have at least 2 cells");
  ModeField field;
  field.n = raster_n;
  const Vec2 lo = domain.bbox_lo(), hi = domain.bbox_hi();
  const double dx = (hi.x - lo.x) / raster_n, dy = (hi.y - lo.y) / raster_n;
  field.xs.resize(raster_n);
  field.ys.resize(raster_n);
  for (int i = 0; i < raster_n; ++i) {
    field.xs[i] = lo.x + (i + 0.5) * dx;
    field.ys[i] = lo.y + (i + 0.5) * dy;
  }
  std::vector<Vec2> inside;
  std::vector<std::pair<int, int>> where;
  for (int iy = 0; iy < raster_n; ++iy)
    for (int ix = 0; ix < raster_n; ++ix) {
      const Vec2 p{field.xs[ix], field.ys[iy]};
      if (domain.contains(p)) {
        inside.push_back(p);
        where.emplace_back(iy, ix);
      }
    }
  field.values.setConstant(raster_n, raster_n, std::numeric_limits<double>::quiet_NaN());
  if (inside.empty()) return field;
  const Eigen::VectorXcd vals = mode_values(basis, coefficients, inside);
  double vmax = 0.0;
  for (Eigen::Index i = 0; i < vals.size(); ++i) vmax = std::max(vmax, std::abs(vals(i).real()));
  const double scale = vmax > 0.0 ? 1.0 / vmax : 1.0;
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    field.values(where[i].first, where[i].second) = scale * vals(i).real();
  return field;
}

}  // namespace platemps
