#include "platemps/oracle.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "platemps/basis.hpp"
#include "platemps/boundary.hpp"

namespace platemps {

namespace {

// Rows of the characteristic matrix for one radial family at (radius, 0),
// where the frame is n = (1,0), t = (0,1) and the curvature radius equals
// the disk radius. Imaginary parts vanish there for f(r) e^{in theta}.
std::pair<double, double> characteristic_rows(BcTag bc, double nu, double radius, int n, double k,
                                              bool modified) {
  PlateMaterial mat;
  mat.nu = nu;  // D = 1; the common factor cancels in the determinant
  const Vec2 p{radius, 0.0};
  const Vec2 en{1.0, 0.0}, et{0.0, 1.0};
  const PointDerivs d = fb_point_derivs(modified, n, k, p);
  switch (bc) {
    case BcTag::Clamped: return {d.w.real(), d.wx.real()};
    case BcTag::SimplySupported:
      return {d.w.real(), torsion_moment(d, en, et, mat).real()};
    case BcTag::Free:
      return {torsion_moment(d, en, et, mat).real(),
              kelvin_kirchhoff(d, en, et, radius, mat).real()};
  }
  return {0.0, 0.0};
}

}  // namespace

double DiskCharacteristic::operator()(double k) const {
  const auto [j0, j1] = characteristic_rows(bc, nu, radius, n, k, false);
  auto [i0, i1] = characteristic_rows(bc, nu, radius, n, k, true);
  // scale the I column by e^{-kR}: keeps the determinant in range without
  // moving its roots
  const double s = std::exp(-k * radius);
  i0 *= s;
  i1 *= s;
  return j0 * i1 - i0 * j1;
}

std::vector<DiskRoot> disk_eigenvalues(BcTag bc, double nu, double radius, int n_max,
                                       double k_max) {
  if (!(radius > 0.0)) throw std::invalid_argument("disk_eigenvalues: radius must be positive");
  std::vector<DiskRoot> roots;
  constexpr double kGridStep = 1e-3;
  for (int n = 0; n <= n_max; ++n) {
    const DiskCharacteristic det{bc, nu, radius, n};
    double ka = 0.1;
    double fa = det(ka);
    for (double kb = ka + kGridStep; kb <= k_max + 0.5 * kGridStep; kb += kGridStep) {
      const double fb = det(kb);
      if (fa == 0.0) {
        roots.push_back({ka, n, n == 0 ? 1 : 2});
      } else if (fa * fb < 0.0) {
        double a = ka, b = kb, va = fa;
        while (b - a > 1e-10) {
          const double m = 0.5 * (a + b);
          const double vm = det(m);
          if (va * vm <= 0.0) {
            b = m;
          } else {
            a = m;
            va = vm;
          }
        }
        roots.push_back({0.5 * (a + b), n, n == 0 ? 1 : 2});
      }
      ka = kb;
      fa = fb;
    }
  }
  std::sort(roots.begin(), roots.end(), [](const DiskRoot& a, const DiskRoot& b) { return a.k < b.k; });
  return roots;
}

std::pair<double, double> disk_mode_coefficients(BcTag bc, double nu, double k_root, int n,
                                                 double radius) {
  Eigen::Matrix2d A;
  const auto [j0, j1] = characteristic_rows(bc, nu, radius, n, k_root, false);
  const auto [i0, i1] = characteristic_rows(bc, nu, radius, n, k_root, true);
  A << j0, i0, j1, i1;
  // column scaling keeps the rank test meaningful when I_n(kR) is large
  const Eigen::Vector2d cs{std::max(std::abs(j0), std::abs(j1)), std::max(std::abs(i0), std::abs(i1))};
  Eigen::Matrix2d As = A;
  As.col(0) /= cs(0);
  As.col(1) /= cs(1);
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(As, Eigen::ComputeFullV);
  if (svd.singularValues()(1) > 1e-6 * svd.singularValues()(0))
    throw std::invalid_argument("disk_mode_coefficients: k is not a characteristic root");
  Eigen::Vector2d v = svd.matrixV().col(1);
  v(0) /= cs(0);
  v(1) /= cs(1);
  v.normalize();
  return {v(0), v(1)};
}

}  // namespace platemps
