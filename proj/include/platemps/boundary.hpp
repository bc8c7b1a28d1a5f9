#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "platemps/basis.hpp"
#include "platemps/geometry.hpp"

namespace platemps {

// Boundary-condition residual quantities for Kirchhoff-Love plates. All
// tangential/normal derivatives are frozen-frame directional derivatives
// (contractions of the Cartesian derivative tensors with the sample's unit
// normal n and tangent t); the curve's turning enters K_n only through the
// explicit curvature term (cf. Geradin & Rixen, Mechanical Vibrations).

/// Torsion moment M_n = -D (w_nn + nu w_tt).
std::complex<double> torsion_moment(const PointDerivs& d, Vec2 n, Vec2 t,
                                    const PlateMaterial& material);

/// Kelvin-Kirchhoff edge reaction
///   K_n = -D (w_nnn + (2-nu) w_ntt - ((1-nu)/R)(w_nn - w_tt)),
/// the effective shear V_n = Q_n + dM_nt/ds written in frozen-frame
/// derivatives with R > 0 on convex boundary. R may be +-inf (straight edge).
std::complex<double> kelvin_kirchhoff(const PointDerivs& d, Vec2 n, Vec2 t, double curvature_radius,
                                      const PlateMaterial& material);

/// Residual rows B: each boundary sample contributes two rows (its two bc
/// quantities), scaled so that ||B u||^2 equals the discretized tension
/// integral: rows carry sqrt(weight) and the homogenizing powers of
/// k+ = max(k1, k2).
struct ResidualRowSet {
  Eigen::MatrixXcd B;            // (2 * samples) x basis count
  std::vector<BcTag> row_tags;   // tag per row
  double k_plus = 0.0;
};

ResidualRowSet residual_rows(const BasisSet& basis, const std::vector<BoundarySample>& samples,
                             const PlateMaterial& material);

/// Splits ||B u||^2 into per-tag contributions, ordered
/// [clamped, simply-supported, free].
std::array<double, 3> tension_by_tag(const ResidualRowSet& rows, const Eigen::VectorXcd& u);

}  // namespace platemps
