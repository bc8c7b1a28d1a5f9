#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "platemps/geometry.hpp"

namespace platemps {

struct PlateMaterial {
  double D = 1.0;    // flexural rigidity
  double rho = 1.0;  // specific mass
  double h = 1.0;    // thickness
  double T = 0.0;    // in-plane tension per unit length, >= 0
  double nu = 0.33;  // Poisson ratio

  void validate() const;
  double rho_h() const { return rho * h; }
};

// Roots of D l^2 + T l - rho h w^2: lambda1 < 0 carries the oscillatory
// component, lambda2 > 0 the evanescent one.
struct SplitWavenumbers {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double k1 = 0.0;  // sqrt(-lambda1)
  double k2 = 0.0;  // sqrt(lambda2)
  double delta_lambda = 0.0;
  double omega = 0.0;

  double k_plus() const { return k1 > k2 ? k1 : k2; }
  double k_minus() const { return k1 < k2 ? k1 : k2; }
};

SplitWavenumbers split_wavenumbers(const PlateMaterial& material, double omega);

/// Scan wavenumber k -> angular frequency, the zero-tension convention
/// k = (rho h / D)^{1/4} sqrt(omega).
double omega_from_scan_k(const PlateMaterial& material, double k);

enum class BasisKind { PlaneWave, FourierBessel };

/// A family of exact solutions of the plate equation at one frequency.
///
/// PlaneWave: exp(i k1 d.x) over equispaced directions, plus real
/// exponentials exp(k2 d.x) scaled to unit max modulus on the boundary.
/// FourierBessel: J_n(k1 r) e^{in theta} for |n| <= L, plus normalized
/// I_n(k2 r) e^{in theta}.
struct BasisSet {
  BasisKind kind = BasisKind::PlaneWave;
  double scan_k = 0.0;
  double k1 = 0.0, k2 = 0.0;
  int count_osc = 0, count_eva = 0;
  std::vector<Vec2> dir_osc, dir_eva;   // plane-wave directions
  int order_max = 0;                    // Fourier-Bessel L; orders -L..L
  // log of the max boundary modulus per function (0 for oscillatory members)
  std::vector<double> log_normalizer;
  // optional coefficient-space rotation (see dft_precondition)
  Eigen::MatrixXcd precondition;

  int total() const { return count_osc + count_eva; }
  double normalizer(int f) const;
};

BasisSet build_basis(BasisKind kind, const SplitWavenumbers& split, int count_osc, int count_eva,
                     const std::vector<BoundarySample>& boundary, double scan_k);

/// Values and Cartesian partials d^{a+b}/dx^a dy^b, a+b <= max_order, for
/// every basis function at every point. deriv(a,b) is (points x functions).
struct EvalTable {
  int max_order = 0;
  std::vector<Eigen::MatrixXcd> d;

  static int index(int a, int b) {
    const int o = a + b;
    return o * (o + 1) / 2 + b;
  }
  const Eigen::MatrixXcd& deriv(int a, int b) const { return d[index(a, b)]; }
  Eigen::MatrixXcd& deriv(int a, int b) { return d[index(a, b)]; }
  std::complex<double> value(int func, int point, int a, int b) const {
    return deriv(a, b)(point, func);
  }
};

EvalTable eval_basis(const BasisSet& basis, const std::vector<Vec2>& points, int max_order = 3);

/// Rotates the plane-wave coefficient space by the unitary DFT across the
/// direction index, mapping the family to approximate Fourier-Bessel
/// functions. Off by default; leaves tensions invariant (congruence).
BasisSet dft_precondition(const BasisSet& basis);

/// Derivatives of one function at one point, as consumed by the boundary
/// operators.
struct PointDerivs {
  std::complex<double> w{}, wx{}, wy{};
  std::complex<double> wxx{}, wxy{}, wyy{};
  std::complex<double> wxxx{}, wxxy{}, wxyy{}, wyyy{};

  static PointDerivs from_table(const EvalTable& t, int func, int point);
};

/// Cartesian derivative jet of J_n(k r) e^{in theta} (modified=false) or
/// I_n(k r) e^{in theta} (modified=true) at a point, to order 3. Shared by
/// the Fourier-Bessel evaluation path and the disk oracle.
PointDerivs fb_point_derivs(bool modified, int n, double k, Vec2 p);

}  // namespace platemps
