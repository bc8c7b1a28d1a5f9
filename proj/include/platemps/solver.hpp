#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "platemps/basis.hpp"
#include "platemps/eig.hpp"
#include "platemps/geometry.hpp"

namespace platemps {

/// Everything a frequency scan needs besides the k grid. Boundary and
/// interior samples are drawn once and shared across all k.
struct ScanSetup {
  PlateMaterial material;
  BasisKind basis_kind = BasisKind::PlaneWave;
  double count_per_k = 8.0;  // basis size rule: total = ceil(c * k), rounded up to even
  int count_total = 0;       // explicit override when > 0
  int count_osc = 0;         // explicit split overrides when > 0
  int count_eva = 0;
  bool precondition = false;
  int branches = 4;          // tension branches tracked (m)
  double reg_eps = 1e-12;
  std::vector<BoundarySample> boundary;
  InteriorSampleSet interior;

  void resolve_counts(double k, int& osc, int& eva) const;
};

struct PointSolve {
  double k = 0.0;
  BasisSet basis;
  TensionSolution solution;
};

/// Full pipeline at one scan wavenumber: split, basis, Gram pair, tensions.
PointSolve solve_at(const ScanSetup& setup, double k);

struct TensionCurve {
  std::vector<double> ks;             // strictly increasing, successful points only
  Eigen::MatrixXd taus;               // ks.size() x branches
  std::vector<double> g_conditions;
  std::vector<std::pair<double, std::string>> failures;  // skipped grid points
};

TensionCurve scan(const ScanSetup& setup, double k_min, double k_max, double step,
                  int threads = 1);

struct MinimumCandidate {
  int index = 0;         // position in the curve grid
  int multiplicity = 1;  // branches dipping below the threshold there
};

/// Interior local minima of the first branch lying below
/// dip_ratio * median(branch); multiplicity counts branches dipping at the
/// same grid point against their own medians.
std::vector<MinimumCandidate> find_minima(const TensionCurve& curve, double dip_ratio = 0.1);

struct ModeResult {
  double k_star = 0.0;
  double omega_star = 0.0;
  int multiplicity = 1;
  Eigen::MatrixXcd coefficients;  // basis_count x multiplicity, G-orthonormal
  double tension_at_min = 0.0;
  BasisSet basis;                 // basis at k_star, for field evaluation
};

/// Vertex of the parabola through three points; returns x1 when the fit is
/// degenerate (collinear or concave).
double parabola_vertex(double x0, double y0, double x1, double y1, double x2, double y2);

/// Parabola through the three (k, log tau_1) points around the minimum; one
/// re-evaluation at the vertex; keeps the better of vertex and grid point.
ModeResult refine_minimum(const ScanSetup& setup, const TensionCurve& curve,
                          const MinimumCandidate& candidate);

/// Mode values at arbitrary points.
Eigen::VectorXcd mode_values(const BasisSet& basis, const Eigen::VectorXcd& coefficients,
                             const std::vector<Vec2>& points);

/// Axis-aligned raster of Re(sum u_i phi_i) over the bounding box, cell
/// centers, NaN outside the domain, normalized to max |value| = 1.
struct ModeField {
  int n = 0;
  std::vector<double> xs, ys;  // cell-center coordinates
  Eigen::MatrixXd values;      // row i <-> ys[i], col j <-> xs[j]
};

ModeField evaluate_mode(const StarDomain& domain, const BasisSet& basis,
                        const Eigen::VectorXcd& coefficients, int raster_n);

}  // namespace platemps
